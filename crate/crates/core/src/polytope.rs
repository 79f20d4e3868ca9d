//! Combinatorial models of the five Platonic solids.
//!
//! A [`Polytope`] is a vertex count plus one oriented vertex cycle per face.
//! The shipped solids are consistently oriented: every directed edge `u → v`
//! occurs in exactly one face cycle, and its reverse in the neighbouring one.
//! Vertex indices are 0-based internally; [`PolytopeJson`] reports them
//! 1-based.
//!
//! Dodecahedron labelling (1-based): the top pentagon is 1..5, vertex `5+i`
//! hangs below vertex `i`, the lower ring is 11..15 and the bottom pentagon
//! 16..20, so faces P1 = {1,2,3,4,5} and P12 = {16,...,20} are opposite.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{is_prime, GfMatrix, PrimeField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solid {
    Tetrahedron,
    Hexahedron,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Hexahedron,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Hexahedron => "hexahedron",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
        }
    }

    /// Number of faces meeting at each vertex.
    pub fn vertex_degree(self) -> usize {
        match self {
            Solid::Tetrahedron | Solid::Hexahedron | Solid::Dodecahedron => 3,
            Solid::Octahedron => 4,
            Solid::Icosahedron => 5,
        }
    }

    pub fn face_size(self) -> usize {
        match self {
            Solid::Tetrahedron | Solid::Octahedron | Solid::Icosahedron => 3,
            Solid::Hexahedron => 4,
            Solid::Dodecahedron => 5,
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(Solid::Tetrahedron),
            "hexahedron" | "cube" => Ok(Solid::Hexahedron),
            "octahedron" => Ok(Solid::Octahedron),
            "dodecahedron" => Ok(Solid::Dodecahedron),
            "icosahedron" => Ok(Solid::Icosahedron),
            _ => Err(Error::UnknownSolid(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    name: String,
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
}

impl Polytope {
    /// An arbitrary face structure. Only index ranges are checked here; use
    /// [`Polytope::validate`] for the closed-surface invariants.
    pub fn custom(name: impl Into<String>, vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        for face in &faces {
            if face.len() < 2 {
                return Err(Error::invalid("faces need at least two vertices"));
            }
            if let Some(&v) = face.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::IndexError {
                    index: v,
                    len: vertex_count,
                });
            }
            if face.iter().collect::<BTreeSet<_>>().len() != face.len() {
                return Err(Error::invalid("face repeats a vertex"));
            }
        }
        Ok(Self {
            name: name.into(),
            vertex_count,
            faces,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for face in &self.faces {
            for (u, v) in cycle_edges(face) {
                set.insert((u.min(v), u.max(v)));
            }
        }
        set.into_iter().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn feature_count(&self, feature: Feature) -> usize {
        match feature {
            Feature::Faces => self.face_count(),
            Feature::Edges => self.edge_count(),
            Feature::Vertices => self.vertex_count,
        }
    }

    /// Faces containing vertex `v`, in index order.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.faces[f].contains(&v)).collect()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks the closed-surface invariants: Euler characteristic 2, a uniform
    /// face size, a uniform vertex degree, every edge shared by exactly two
    /// faces, and a consistent orientation of the face cycles.
    pub fn validate(&self) -> Result<()> {
        let v = self.vertex_count as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        if v - e + f != 2 {
            return Err(Error::invalid(format!("Euler characteristic {} != 2", v - e + f)));
        }
        let size = self.faces[0].len();
        if self.faces.iter().any(|c| c.len() != size) {
            return Err(Error::invalid("non-uniform face size"));
        }
        let degree = self.faces_at(0).len();
        if (0..self.vertex_count).any(|x| self.faces_at(x).len() != degree) {
            return Err(Error::invalid("non-uniform vertex degree"));
        }
        let mut directed = BTreeMap::new();
        for face in &self.faces {
            for edge in cycle_edges(face) {
                *directed.entry(edge).or_insert(0usize) += 1;
            }
        }
        for (&(a, b), &count) in &directed {
            if count != 1 || directed.get(&(b, a)) != Some(&1) {
                return Err(Error::invalid(format!(
                    "edge ({a}, {b}) is not shared by exactly two oppositely oriented faces"
                )));
            }
        }
        Ok(())
    }

    /// F×V incidence matrix over GF(2): entry (a, i) = 1 iff vertex i is on face a.
    pub fn face_parity_matrix(&self) -> GfMatrix {
        let f2 = PrimeField::new(2).expect("2 is prime");
        let mut m = GfMatrix::zeros(f2, self.faces.len(), self.vertex_count);
        for (a, face) in self.faces.iter().enumerate() {
            for &v in face {
                m.set(a, v, 1);
            }
        }
        m
    }

    /// Face-adjacency distances (faces adjacent when they share an edge).
    pub fn face_distances(&self, from: usize) -> Vec<Option<usize>> {
        let edge_sets: Vec<BTreeSet<(usize, usize)>> = self
            .faces
            .iter()
            .map(|c| cycle_edges(c).map(|(u, v)| (u.min(v), u.max(v))).collect())
            .collect();
        let mut dist = vec![None; self.faces.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(f) = queue.pop_front() {
            let d = dist[f].unwrap();
            for g in 0..self.faces.len() {
                if dist[g].is_none() && !edge_sets[f].is_disjoint(&edge_sets[g]) {
                    dist[g] = Some(d + 1);
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    /// The unique face farthest from `face` in the face-adjacency graph,
    /// provided it shares no vertex with `face`.
    pub fn opposite_face(&self, face: usize) -> Result<usize> {
        if face >= self.faces.len() {
            return Err(Error::IndexError {
                index: face,
                len: self.faces.len(),
            });
        }
        let dist = self.face_distances(face);
        let far = dist.iter().flatten().copied().max().unwrap_or(0);
        let candidates: Vec<usize> = (0..self.faces.len()).filter(|&g| dist[g] == Some(far)).collect();
        match candidates.as_slice() {
            [g] if *g != face && self.faces[*g].iter().all(|v| !self.faces[face].contains(v)) => Ok(*g),
            _ => Err(Error::NoOppositeFace(face)),
        }
    }

    /// All unordered pairs of opposite faces, `(f, g)` with `f < g`.
    pub fn opposite_face_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.faces.len())
            .filter_map(|f| self.opposite_face(f).ok().map(|g| (f.min(g), f.max(g))))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Vertices in breadth-first order from `seeds` (ties broken by index).
    pub fn bfs_order(&self, seeds: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut queue = VecDeque::new();
        let mut sorted = seeds.to_vec();
        sorted.sort_unstable();
        for s in sorted {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        let adj: Vec<Vec<usize>> = (0..self.vertex_count).map(|v| self.neighbours(v)).collect();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Dual polytope: one vertex per face, one face per vertex. The dual face
    /// of vertex `v` lists the faces around `v` in rotational order, which
    /// keeps the dual consistently oriented.
    pub fn dual(&self, name: impl Into<String>) -> Result<Polytope> {
        let mut owner = BTreeMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            for edge in cycle_edges(face) {
                owner.insert(edge, f);
            }
        }
        let mut faces = Vec::with_capacity(self.vertex_count);
        for v in 0..self.vertex_count {
            let around = self.faces_at(v);
            let Some(&start) = around.first() else {
                return Err(Error::invalid(format!("vertex {v} lies on no face")));
            };
            let mut cycle = vec![start];
            let mut current = start;
            loop {
                let face = &self.faces[current];
                let pos = face.iter().position(|&x| x == v).unwrap();
                let pred = face[(pos + face.len() - 1) % face.len()];
                let next = *owner
                    .get(&(v, pred))
                    .ok_or_else(|| Error::invalid("open surface has no dual"))?;
                if next == start {
                    break;
                }
                cycle.push(next);
                current = next;
                if cycle.len() > around.len() {
                    return Err(Error::invalid("face fan does not close"));
                }
            }
            faces.push(cycle);
        }
        Polytope::custom(name, self.faces.len(), faces)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            name: self.name.clone(),
            vertices: self.vertex_count,
            edges: self.edge_count(),
            faces: self
                .faces
                .iter()
                .map(|c| c.iter().map(|&v| v + 1).collect())
                .collect(),
        }
    }
}

/// Directed edges of a face cycle.
fn cycle_edges(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..face.len()).map(move |i| (face[i], face[(i + 1) % face.len()]))
}

/// Incidence table with 1-based vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: Vec<Vec<usize>>,
}

pub fn platonic(solid: Solid) -> Polytope {
    match solid {
        Solid::Tetrahedron => Polytope::custom(
            solid.name(),
            4,
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]],
        ),
        // vertex = x + 2y + 4z
        Solid::Hexahedron => Polytope::custom(
            solid.name(),
            8,
            vec![
                vec![0, 2, 3, 1],
                vec![4, 5, 7, 6],
                vec![0, 4, 6, 2],
                vec![1, 3, 7, 5],
                vec![0, 1, 5, 4],
                vec![2, 6, 7, 3],
            ],
        ),
        Solid::Octahedron => platonic(Solid::Hexahedron).dual(solid.name()),
        Solid::Dodecahedron => Polytope::custom(solid.name(), 20, dodecahedron_faces()),
        Solid::Icosahedron => platonic(Solid::Dodecahedron).dual(solid.name()),
    }
    .expect("built-in solids are well formed")
}

pub fn platonic_by_name(name: &str) -> Result<Polytope> {
    Ok(platonic(name.parse()?))
}

fn dodecahedron_faces() -> Vec<Vec<usize>> {
    let top = |i: usize| i % 5;
    let upper = |i: usize| 5 + i % 5;
    let lower = |i: usize| 10 + i % 5;
    let bottom = |i: usize| 15 + i % 5;
    let mut faces = vec![(0..5).map(top).collect::<Vec<_>>()];
    for i in 0..5 {
        faces.push(vec![top(i), upper(i), lower(i), upper(i + 1), top(i + 1)]);
    }
    for i in 0..5 {
        faces.push(vec![bottom(i), bottom(i + 1), lower(i + 1), upper(i + 1), lower(i)]);
    }
    faces.push(vec![15, 19, 18, 17, 16]);
    faces
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Feature {
    Faces,
    Edges,
    Vertices,
}

impl Feature {
    pub const ALL: [Feature; 3] = [Feature::Faces, Feature::Edges, Feature::Vertices];
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feature::Faces => "faces",
            Feature::Edges => "edges",
            Feature::Vertices => "vertices",
        })
    }
}

/// A (solid, feature) pair whose count is a prime plus one, so an AME(n, p)
/// Reed–Solomon state fits on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolidCodeEntry {
    pub solid: Solid,
    pub feature: Feature,
    pub n: usize,
    pub p: u32,
}

impl SolidCodeEntry {
    pub fn ame_label(&self) -> String {
        format!("AME({},{})", self.n, self.p)
    }
}

pub fn solid_code_table() -> Vec<SolidCodeEntry> {
    let mut out = Vec::with_capacity(15);
    for solid in Solid::ALL {
        let pt = platonic(solid);
        for feature in Feature::ALL {
            let n = pt.feature_count(feature);
            let p = (n - 1) as u32;
            assert!(is_prime(p), "{solid} {feature}: {n} - 1 is not prime");
            out.push(SolidCodeEntry { solid, feature, n, p });
        }
    }
    out
}
