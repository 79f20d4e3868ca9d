use std::collections::BTreeSet;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Bipartition;
use crate::error::{Error, Result};
use crate::polytope::{platonic, Polytope, Solid};

/// How to choose the cuts of a given block size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum PartitionMode {
    /// Every subset, in lexicographic order.
    Exhaustive,
    /// `count` distinct subsets drawn uniformly with ChaCha8 seeded by `seed`.
    Sample { count: usize, seed: u64 },
    /// Geometrically meaningful subsets of a solid's vertices.
    Structured { solid: Solid },
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn exhaustive(n: usize, m: usize) -> Vec<Bipartition> {
    let mut out = Vec::with_capacity(binomial(n, m) as usize);
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        out.push(Bipartition {
            n,
            sites: idx.clone(),
        });
        let Some(i) = (0..m).rev().find(|&i| idx[i] != i + n - m) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

fn sampled(n: usize, m: usize, count: usize, seed: u64) -> Vec<Bipartition> {
    if count as u128 >= binomial(n, m) {
        return exhaustive(n, m);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut sites = index::sample(&mut rng, n, m).into_vec();
        sites.sort_unstable();
        if seen.insert(sites.clone()) {
            out.push(Bipartition { n, sites });
        }
    }
    out
}

/// Vertex subsets of size `m` with geometric meaning on `pt`: single faces,
/// unions of two faces (adjacent or opposite), and breadth-first
/// neighbourhoods of every vertex, edge and face truncated to `m` vertices.
/// Complements of these of size `m` are included as well.
pub fn structured_partitions(pt: &Polytope, m: usize) -> Vec<Bipartition> {
    let n = pt.vertex_count();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    for f in 0..pt.face_count() {
        seeds.push(pt.face(f).to_vec());
        for g in f + 1..pt.face_count() {
            let mut union: Vec<usize> = pt.face(f).iter().chain(pt.face(g)).copied().collect();
            union.sort_unstable();
            union.dedup();
            let shares_edge = pt.face(f).len() + pt.face(g).len() - union.len() == 2;
            if shares_edge || pt.opposite_face(f).ok() == Some(g) {
                seeds.push(union);
            }
        }
    }
    for v in 0..n {
        seeds.push(vec![v]);
    }
    for (u, v) in pt.edges() {
        seeds.push(vec![u, v]);
    }
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for seed in &seeds {
        if seed.len() == m {
            candidates.push(seed.clone());
        }
        let order = pt.bfs_order(seed);
        if m <= order.len() {
            candidates.push(order[..m].to_vec());
        }
    }
    for mut c in candidates {
        c.sort_unstable();
        let complement: Vec<usize> = (0..n).filter(|v| c.binary_search(v).is_err()).collect();
        if complement.len() == m {
            sets.insert(complement);
        }
        sets.insert(c);
    }
    sets.into_iter()
        .filter(|s| !s.is_empty() && s.len() < n)
        .map(|sites| Bipartition { n, sites })
        .collect()
}

/// Cuts of `n` sites with `m` sites on the `A` side.
///
/// `budget` caps the number of cuts produced by any mode; exceeding it is a
/// [`Error::TooLarge`]. `polytope` overrides the solid of a structured mode.
pub fn partitions(
    n: usize,
    m: usize,
    mode: &PartitionMode,
    polytope: Option<&Polytope>,
    budget: usize,
) -> Result<Vec<Bipartition>> {
    if m == 0 || m >= n {
        return Err(Error::invalid(format!("block size {m} is not a proper cut of {n}")));
    }
    let too_large = |size: u128| Error::TooLarge {
        what: "partition count (use sampling)",
        size,
        budget: budget as u128,
    };
    match mode {
        PartitionMode::Exhaustive => {
            let total = binomial(n, m);
            if total > budget as u128 {
                return Err(too_large(total));
            }
            Ok(exhaustive(n, m))
        }
        PartitionMode::Sample { count, seed } => {
            if *count > budget {
                return Err(too_large(*count as u128));
            }
            Ok(sampled(n, m, *count, *seed))
        }
        PartitionMode::Structured { solid } => {
            let owned;
            let pt = match polytope {
                Some(pt) => pt,
                None => {
                    owned = platonic(*solid);
                    &owned
                }
            };
            if pt.vertex_count() != n {
                return Err(Error::ShapeMismatch(format!(
                    "{} has {} vertices, state has {n} sites",
                    pt.name(),
                    pt.vertex_count()
                )));
            }
            let cuts = structured_partitions(pt, m);
            if cuts.len() > budget {
                return Err(too_large(cuts.len() as u128));
            }
            Ok(cuts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_and_order() {
        let cuts = partitions(5, 2, &PartitionMode::Exhaustive, None, 100).unwrap();
        assert_eq!(cuts.len(), 10);
        assert_eq!(cuts[0].sites(), &[0, 1]);
        assert_eq!(cuts[9].sites(), &[3, 4]);
        assert!(cuts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(binomial(20, 10), 184_756);
        assert!(matches!(
            partitions(30, 15, &PartitionMode::Exhaustive, None, 200_000),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn sampling_is_reproducible() {
        let mode = PartitionMode::Sample { count: 1000, seed: 42 };
        let a = partitions(20, 10, &mode, None, 200_000).unwrap();
        let b = partitions(20, 10, &mode, None, 200_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().collect::<BTreeSet<_>>().len(), 1000);
        let c = partitions(20, 10, &PartitionMode::Sample { count: 1000, seed: 43 }, None, 200_000).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn structured_includes_opposite_pentagons() {
        let dod = platonic(Solid::Dodecahedron);
        let cuts = partitions(20, 10, &PartitionMode::Structured { solid: Solid::Dodecahedron }, None, 10_000).unwrap();
        for (f, g) in dod.opposite_face_pairs() {
            let mut sites: Vec<usize> = dod.face(f).iter().chain(dod.face(g)).copied().collect();
            sites.sort_unstable();
            assert!(cuts.iter().any(|c| c.sites() == sites.as_slice()), "pair ({f},{g})");
        }
        let five = structured_partitions(&dod, 5);
        assert!(five.iter().any(|c| c.sites() == [0, 1, 2, 3, 4]));
    }
}
