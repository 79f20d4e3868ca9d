//! Agreement-tensor contraction of face tensors over a polytope.
//!
//! Every face carries a tensor whose sites sit on the face's vertices (read
//! around the face cycle, after a rotation and optional reflection). The
//! agreement tensor at a vertex forces all ancilla indices meeting there to
//! equal the vertex spin, so it is never materialized: each face tensor is
//! simply evaluated at the spins of its vertices.
//!
//! * Vertex mode: the vertex spins are physical and the amplitude of
//!   `|s_1 ... s_V⟩` is the product of the face tensors at those spins.
//! * Hovering mode: each face tensor has one extra site, the physical qubit
//!   of that face; vertex spins are internal and summed over.
//!
//! Results are unnormalized coefficient vectors in the scalar type of the
//! face tensors; integer tensors therefore contract exactly.

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::code::LinearCodeState;
use crate::error::{Error, Result};
use crate::polytope::{platonic, Polytope, Solid};
use crate::scalar::Amplitude;
use crate::state::{dense_len, StateVector};
use crate::CoeffState;

/// Rotation (and optional reflection) of a face tensor around its cycle.
///
/// Tensor site `j` reads vertex `cycle[(offset + j) % k]`, or
/// `cycle[(offset - j) % k]` when reflected.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pub offset: usize,
    #[serde(default)]
    pub reflected: bool,
}

impl Orientation {
    pub fn rotation(offset: usize) -> Self {
        Self {
            offset,
            reflected: false,
        }
    }

    /// Vertex read by each tensor site.
    pub fn site_vertices(&self, cycle: &[usize]) -> Vec<usize> {
        (0..cycle.len()).map(|j| self.vertex_for_site(cycle, j)).collect()
    }

    fn vertex_for_site(&self, cycle: &[usize], j: usize) -> usize {
        let k = cycle.len();
        if self.reflected {
            cycle[(self.offset % k + k - j % k) % k]
        } else {
            cycle[(self.offset + j) % k]
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FaceAssignment<T> {
    pub face_index: usize,
    pub tensor: StateVector<T>,
    pub orientation: Orientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ContractionMode {
    Vertex,
    /// `position` is the 0-based site of the face tensor holding the
    /// physical qubit.
    Hovering { position: usize },
}

#[derive(Debug, Clone)]
pub struct AgreementContraction<T> {
    polytope: Polytope,
    assignments: Vec<FaceAssignment<T>>,
    mode: ContractionMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Vertex(usize),
    Hover(usize),
}

impl<T: Amplitude> AgreementContraction<T> {
    pub fn new(polytope: Polytope, mut assignments: Vec<FaceAssignment<T>>, mode: ContractionMode) -> Result<Self> {
        assignments.sort_by_key(|a| a.face_index);
        if assignments.len() != polytope.face_count()
            || assignments.iter().enumerate().any(|(i, a)| a.face_index != i)
        {
            return Err(Error::invalid("need exactly one assignment per face"));
        }
        let d = assignments[0].tensor.d();
        let extra = usize::from(matches!(mode, ContractionMode::Hovering { .. }));
        for a in &assignments {
            let size = polytope.face(a.face_index).len();
            if a.tensor.d() != d {
                return Err(Error::invalid("face tensors disagree on local dimension"));
            }
            if a.tensor.n() != size + extra {
                return Err(Error::ShapeMismatch(format!(
                    "face {} has {size} vertices but its tensor has {} sites",
                    a.face_index,
                    a.tensor.n()
                )));
            }
            if let ContractionMode::Hovering { position } = mode {
                if position > size {
                    return Err(Error::IndexError {
                        index: position,
                        len: size + 1,
                    });
                }
            }
        }
        if (0..polytope.vertex_count()).any(|v| polytope.faces_at(v).is_empty()) {
            return Err(Error::invalid("every vertex must lie on a face"));
        }
        Ok(Self {
            polytope,
            assignments,
            mode,
        })
    }

    /// Same tensor on every face with the given orientations.
    pub fn uniform(
        polytope: Polytope,
        tensor: &StateVector<T>,
        orientations: &[Orientation],
        mode: ContractionMode,
    ) -> Result<Self> {
        if orientations.len() != polytope.face_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} orientations for {} faces",
                orientations.len(),
                polytope.face_count()
            )));
        }
        let assignments = orientations
            .iter()
            .enumerate()
            .map(|(face_index, &orientation)| FaceAssignment {
                face_index,
                tensor: tensor.clone(),
                orientation,
            })
            .collect();
        Self::new(polytope, assignments, mode)
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn mode(&self) -> ContractionMode {
        self.mode
    }

    fn d(&self) -> usize {
        self.assignments[0].tensor.d()
    }

    /// For face `a`, the label read by each tensor site.
    fn site_labels(&self, a: usize) -> Vec<Label> {
        let asg = &self.assignments[a];
        let cycle = self.polytope.face(a);
        let mut labels: Vec<Label> = (0..cycle.len())
            .map(|j| Label::Vertex(asg.orientation.vertex_for_site(cycle, j)))
            .collect();
        if let ContractionMode::Hovering { position } = self.mode {
            labels.insert(position, Label::Hover(a));
        }
        labels
    }

    /// Output sites: vertices in vertex mode, faces in hovering mode.
    pub fn output_sites(&self) -> usize {
        match self.mode {
            ContractionMode::Vertex => self.polytope.vertex_count(),
            ContractionMode::Hovering { .. } => self.polytope.face_count(),
        }
    }

    /// Contraction by summing over vertex configurations directly.
    pub fn contract(&self) -> Result<StateVector<T>> {
        let d = self.d();
        let v = self.polytope.vertex_count();
        let configs = dense_len(v, d)?;
        let out_len = dense_len(self.output_sites(), d)?;
        let faces = self.polytope.face_count();

        // For face a: weight of each vertex digit in the tensor index, and
        // the stride of the hovering digit.
        let mut vertex_weights: Vec<Vec<(usize, usize)>> = Vec::with_capacity(faces);
        let mut hover_stride = vec![0usize; faces];
        for a in 0..faces {
            let labels = self.site_labels(a);
            let k = labels.len();
            let mut weights = Vec::new();
            for (j, l) in labels.iter().enumerate() {
                let w = d.pow((k - 1 - j) as u32);
                match l {
                    Label::Vertex(x) => weights.push((*x, w)),
                    Label::Hover(_) => hover_stride[a] = w,
                }
            }
            vertex_weights.push(weights);
        }
        let tensors: Vec<&[T]> = self.assignments.iter().map(|a| a.tensor.amps()).collect();

        let mut out = vec![T::zero(); out_len];
        let mut spins = vec![0usize; v];
        let mut scratch = vec![T::zero(); out_len];
        let mut factors = vec![T::zero(); d];
        for config in 0..configs {
            if config > 0 {
                increment(&mut spins, d);
            }
            let local = |a: usize| -> usize { vertex_weights[a].iter().map(|&(x, w)| spins[x] * w).sum() };
            match self.mode {
                ContractionMode::Vertex => {
                    out[config] = (0..faces).fold(T::one(), |acc, a| acc * tensors[a][local(a)]);
                }
                ContractionMode::Hovering { .. } => {
                    // Rank-one update: out += ⊗_a (T_a at these spins, h_a).
                    scratch[0] = T::one();
                    let mut len = 1;
                    for a in 0..faces {
                        let base = local(a);
                        for (h, f) in factors.iter_mut().enumerate() {
                            *f = tensors[a][base + h * hover_stride[a]];
                        }
                        for j in (0..len).rev() {
                            let s = scratch[j];
                            for h in 0..d {
                                scratch[j * d + h] = s * factors[h];
                            }
                        }
                        len *= d;
                    }
                    for (o, &s) in out.iter_mut().zip(&scratch) {
                        *o = *o + s;
                    }
                }
            }
        }
        finish(self.output_sites(), d, out)
    }

    /// Contraction that absorbs one face at a time in `order` and sums out a
    /// vertex as soon as all of its faces have been absorbed (hovering
    /// mode). Intermediate tensors are capped at 2^26 entries.
    pub fn contract_by_elimination(&self, order: &[usize]) -> Result<StateVector<T>> {
        let faces = self.polytope.face_count();
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..faces).collect::<Vec<_>>() {
            return Err(Error::invalid("order must list every face exactly once"));
        }
        let d = self.d();
        let hovering = matches!(self.mode, ContractionMode::Hovering { .. });
        let mut remaining: Vec<usize> = (0..self.polytope.vertex_count())
            .map(|x| self.polytope.faces_at(x).len())
            .collect();
        let mut labels: Vec<Label> = Vec::new();
        let mut data = vec![T::one()];

        for &a in order {
            let site_labels = self.site_labels(a);
            let mut new_labels = labels.clone();
            for l in &site_labels {
                if !new_labels.contains(l) {
                    new_labels.push(*l);
                }
            }
            let new_len = dense_len(new_labels.len(), d)?;
            let positions: Vec<usize> = site_labels
                .iter()
                .map(|l| new_labels.iter().position(|x| x == l).unwrap())
                .collect();
            let tensor = self.assignments[a].tensor.amps();
            let shift = new_len / data.len();
            let mut next = Vec::with_capacity(new_len);
            let mut digits = vec![0usize; new_labels.len()];
            for idx in 0..new_len {
                if idx > 0 {
                    increment(&mut digits, d);
                }
                let local = positions.iter().fold(0usize, |acc, &p| acc * d + digits[p]);
                next.push(data[idx / shift] * tensor[local]);
            }
            labels = new_labels;
            data = next;

            if hovering {
                for x in self.polytope.face(a) {
                    remaining[*x] -= 1;
                }
                let keep: Vec<bool> = labels
                    .iter()
                    .map(|l| !matches!(l, Label::Vertex(x) if remaining[*x] == 0))
                    .collect();
                if keep.iter().any(|k| !k) {
                    data = sum_out(&data, d, &keep);
                    labels = labels.into_iter().zip(&keep).filter(|(_, k)| **k).map(|(l, _)| l).collect();
                }
            }
        }

        // Reorder axes to canonical output order.
        let n_out = self.output_sites();
        let target: Vec<Label> = (0..n_out)
            .map(|i| if hovering { Label::Hover(i) } else { Label::Vertex(i) })
            .collect();
        let perm: Vec<usize> = target
            .iter()
            .map(|t| labels.iter().position(|l| l == t).expect("all output labels present"))
            .collect();
        let sv = StateVector::new(n_out, d, data)?.permute_sites(&perm)?;
        finish(n_out, d, sv.into_amps())
    }
}

fn finish<T: Amplitude>(n: usize, d: usize, amps: Vec<T>) -> Result<StateVector<T>> {
    if amps.iter().all(|a| a.is_zero()) {
        return Err(Error::ZeroState);
    }
    StateVector::new(n, d, amps)
}

/// Big-endian odometer step.
fn increment(digits: &mut [usize], d: usize) {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < d {
            return;
        }
        *x = 0;
    }
}

/// Sums the axes with `keep[i] == false` out of a dense tensor.
fn sum_out<T: Amplitude>(data: &[T], d: usize, keep: &[bool]) -> Vec<T> {
    let kept = keep.iter().filter(|k| **k).count();
    let mut out = vec![T::zero(); d.pow(kept as u32)];
    let mut digits = vec![0usize; keep.len()];
    for (idx, &v) in data.iter().enumerate() {
        if idx > 0 {
            increment(&mut digits, d);
        }
        let target = digits
            .iter()
            .zip(keep)
            .filter(|(_, k)| **k)
            .fold(0usize, |acc, (&x, _)| acc * d + x);
        out[target] = out[target] + v;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ame52Variant {
    /// The tabulated, rotation-dependent state.
    Table1,
    RotationInvariant,
}

impl Ame52Variant {
    pub fn tensor(self) -> CoeffState {
        match self {
            Ame52Variant::Table1 => catalog::ame52_table1(),
            Ame52Variant::RotationInvariant => catalog::ame52_rotinv(),
        }
    }
}

/// How a built state was assembled; stored next to the amplitudes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentRecord {
    pub solid: Solid,
    pub tensor: String,
    pub mode: ContractionMode,
    pub orientations: Vec<Orientation>,
    /// 1-based hovering site within each cell.
    pub hover_position: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuiltState {
    pub id: String,
    pub coefficients: CoeffState,
    pub assignment: AssignmentRecord,
}

/// Offset 0, no reflection, on every face.
pub fn canonical_orientations(faces: usize) -> Vec<Orientation> {
    vec![Orientation::default(); faces]
}

/// Dodecahedron assignment found by a local search that minimizes the number
/// of 6-vertex blocks of the tabulated-tensor state below 6 bits (8 of 38760
/// remain; see `examples/orientation_search.rs`).
pub fn reference_orientations() -> Vec<Orientation> {
    REFERENCE_ORIENTATIONS
        .iter()
        .map(|&(offset, reflected)| Orientation { offset, reflected })
        .collect()
}

const REFERENCE_ORIENTATIONS: [(usize, bool); 12] = [
    (3, true),
    (3, false),
    (2, true),
    (1, true),
    (1, false),
    (1, true),
    (1, true),
    (1, false),
    (3, false),
    (1, true),
    (4, true),
    (0, false),
];

/// Uniformly random rotations and reflections from a seeded ChaCha8 stream.
pub fn random_orientations(faces: usize, face_size: usize, seed: u64) -> Vec<Orientation> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..faces)
        .map(|_| Orientation {
            offset: rng.gen_range(0..face_size),
            reflected: rng.gen_bool(0.5),
        })
        .collect()
}

/// Dodecahedron with a 5-qubit AME state on every pentagon, vertex mode.
pub fn build_d1(orientations: Option<&[Orientation]>, variant: Ame52Variant) -> Result<BuiltState> {
    let pt = platonic(Solid::Dodecahedron);
    let orientations = orientations.map_or_else(|| canonical_orientations(pt.face_count()), |o| o.to_vec());
    let tensor = variant.tensor();
    let tn = AgreementContraction::uniform(pt, &tensor, &orientations, ContractionMode::Vertex)?;
    let coefficients = tn.contract()?;
    let (id, name) = match variant {
        Ame52Variant::Table1 => ("d1", "ame52"),
        Ame52Variant::RotationInvariant => ("d1-rot", "ame52-rot"),
    };
    Ok(BuiltState {
        id: id.into(),
        coefficients,
        assignment: AssignmentRecord {
            solid: Solid::Dodecahedron,
            tensor: name.into(),
            mode: ContractionMode::Vertex,
            orientations,
            hover_position: None,
        },
    })
}

/// Dodecahedron with the rotation-invariant 5-qubit state on every pentagon.
pub fn build_d2() -> Result<BuiltState> {
    let mut built = build_d1(None, Ame52Variant::RotationInvariant)?;
    built.id = "d2".into();
    Ok(built)
}

/// The code whose uniform superposition is the rotation-invariant
/// dodecahedron state: even parity on every pentagon.
pub fn d2_code() -> LinearCodeState {
    LinearCodeState::from_parity_checks(&platonic(Solid::Dodecahedron).face_parity_matrix())
}

/// Twelve hovering qubits, one per pentagon, each cell a 6-qubit AME state
/// with the hovering qubit at `hover_position` (1-based).
pub fn build_hovering(hover_position: usize, orientations: Option<&[Orientation]>) -> Result<BuiltState> {
    if !(1..=6).contains(&hover_position) {
        return Err(Error::invalid(format!("hover position {hover_position} not in 1..=6")));
    }
    let pt = platonic(Solid::Dodecahedron);
    let orientations = orientations.map_or_else(|| canonical_orientations(pt.face_count()), |o| o.to_vec());
    let mode = ContractionMode::Hovering {
        position: hover_position - 1,
    };
    let tn = AgreementContraction::uniform(pt, &catalog::ame62(), &orientations, mode)?;
    let coefficients = tn.contract_by_elimination(&hovering_order())?;
    Ok(BuiltState {
        id: "hovering".into(),
        coefficients,
        assignment: AssignmentRecord {
            solid: Solid::Dodecahedron,
            tensor: "ame62".into(),
            mode,
            orientations,
            hover_position: Some(hover_position),
        },
    })
}

/// Top pentagon, upper band, lower band, bottom pentagon: keeps the open
/// vertex frontier at a single ring.
pub fn hovering_order() -> Vec<usize> {
    (0..12).collect()
}

/// Checks that the pentagon sign `(-1)^{Σ_a η_a}`, with
/// `η_a = Σ_j s_{c_j} s_{c_{j+1}}` around each face cycle, is +1 on every
/// configuration with even parity on all faces. Returns the number of
/// configurations checked and the number with sign -1.
pub fn sign_lemma_counts() -> (usize, usize) {
    let pt = platonic(Solid::Dodecahedron);
    let code = d2_code();
    let mut checked = 0;
    let mut negative = 0;
    for word in code.codewords().expect("256 words") {
        checked += 1;
        let eta: usize = pt
            .faces()
            .iter()
            .map(|c| {
                (0..c.len())
                    .map(|j| (word[c[j]] * word[c[(j + 1) % c.len()]]) as usize)
                    .sum::<usize>()
            })
            .sum();
        if eta % 2 == 1 {
            negative += 1;
        }
    }
    (checked, negative)
}

pub fn sign_lemma_check() -> bool {
    let (checked, negative) = sign_lemma_counts();
    checked == 256 && negative == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_reads() {
        let cycle = [10, 11, 12, 13, 14];
        let o = Orientation::rotation(2);
        assert_eq!((0..5).map(|j| o.vertex_for_site(&cycle, j)).collect::<Vec<_>>(), [12, 13, 14, 10, 11]);
        let r = Orientation {
            offset: 1,
            reflected: true,
        };
        assert_eq!((0..5).map(|j| r.vertex_for_site(&cycle, j)).collect::<Vec<_>>(), [11, 10, 14, 13, 12]);
    }

    #[test]
    fn single_face_is_identity() {
        let pt = Polytope::custom("pentagon", 5, vec![vec![0, 1, 2, 3, 4]]).unwrap();
        let tensor = catalog::ame52_rotinv();
        let tn = AgreementContraction::uniform(pt.clone(), &tensor, &[Orientation::default()], ContractionMode::Vertex)
            .unwrap();
        assert_eq!(tn.contract().unwrap(), tensor);
        let t1 = catalog::ame52_table1();
        let tn = AgreementContraction::uniform(pt, &t1, &[Orientation::default()], ContractionMode::Vertex).unwrap();
        assert_eq!(tn.contract_by_elimination(&[0]).unwrap(), t1);
    }

    #[test]
    fn rejects_bad_assignments() {
        let pt = platonic(Solid::Dodecahedron);
        let bad = AgreementContraction::uniform(pt.clone(), &catalog::ame62(), &canonical_orientations(12), ContractionMode::Vertex);
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
        let short = AgreementContraction::uniform(pt, &catalog::ame52_table1(), &canonical_orientations(3), ContractionMode::Vertex);
        assert!(short.is_err());
    }

    #[test]
    fn zero_state_is_reported() {
        // Two faces on the same two vertices whose tensors have disjoint support.
        let pt = Polytope::custom("digon pair", 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let a = StateVector::new(2, 2, vec![1i64, 0, 0, 0]).unwrap();
        let b = StateVector::new(2, 2, vec![0i64, 0, 0, 1]).unwrap();
        let tn = AgreementContraction::new(
            pt,
            vec![
                FaceAssignment { face_index: 0, tensor: a, orientation: Orientation::default() },
                FaceAssignment { face_index: 1, tensor: b, orientation: Orientation::default() },
            ],
            ContractionMode::Vertex,
        )
        .unwrap();
        assert!(matches!(tn.contract(), Err(Error::ZeroState)));
        assert!(matches!(tn.contract_by_elimination(&[1, 0]), Err(Error::ZeroState)));
    }

    #[test]
    fn d1_is_flat() {
        let d1 = build_d1(None, Ame52Variant::Table1).unwrap();
        assert_eq!(d1.coefficients.len(), 1 << 20);
        assert!(d1.coefficients.amps().iter().all(|&c| c == 1 || c == -1));
        let f = d1.coefficients.normalized::<f64>().unwrap();
        let a = 2f64.powi(-10);
        assert!(f.amps().iter().all(|x| (x.abs() - a).abs() < 1e-15));
    }

    #[test]
    fn d2_matches_code_state() {
        let d2 = build_d2().unwrap();
        let dense = d2_code().dense_statevector().unwrap();
        assert_eq!(d2.coefficients, dense);
        assert_eq!(d2.coefficients.support().len(), 256);
        let rot = build_d1(None, Ame52Variant::RotationInvariant).unwrap();
        assert_eq!(rot.coefficients, d2.coefficients);
        let f = d2.coefficients.normalized::<f64>().unwrap();
        assert!(f.support().iter().all(|&i| f.amp(i) == 1.0 / 16.0));
        let h = platonic(Solid::Dodecahedron).face_parity_matrix();
        for i in d2.coefficients.support() {
            let word: Vec<u16> = d2.coefficients.digits(i).iter().map(|&x| x as u16).collect();
            assert!(h.mul_vec(&word).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn d2_is_orientation_independent() {
        let o = random_orientations(12, 5, 3);
        let a = build_d1(Some(&o), Ame52Variant::RotationInvariant).unwrap();
        assert_eq!(a.coefficients, build_d2().unwrap().coefficients);
    }

    #[test]
    fn sign_lemma() {
        assert_eq!(sign_lemma_counts(), (256, 0));
        assert!(sign_lemma_check());
    }

    #[test]
    fn elimination_matches_direct_vertex_mode() {
        let pt = platonic(Solid::Hexahedron);
        // A 4-qubit tensor with distinct integer entries to catch index slips.
        let tensor = StateVector::new(4, 2, (1..=16).map(|x| x as i64 * if x % 3 == 0 { -1 } else { 1 }).collect()).unwrap();
        let o = random_orientations(6, 4, 11);
        let tn = AgreementContraction::uniform(pt, &tensor, &o, ContractionMode::Vertex).unwrap();
        let direct = tn.contract().unwrap();
        assert_eq!(tn.contract_by_elimination(&[0, 1, 2, 3, 4, 5]).unwrap(), direct);
        assert_eq!(tn.contract_by_elimination(&[5, 2, 0, 3, 1, 4]).unwrap(), direct);
    }

    #[test]
    fn elimination_matches_direct_hovering_mode() {
        let pt = platonic(Solid::Hexahedron);
        let tensor = StateVector::new(5, 2, (0..32).map(|x| (x * 7 % 11) as i64 - 5).collect()).unwrap();
        let o = random_orientations(6, 4, 5);
        for position in [0, 2, 4] {
            let tn = AgreementContraction::uniform(pt.clone(), &tensor, &o, ContractionMode::Hovering { position }).unwrap();
            let direct = tn.contract().unwrap();
            assert_eq!(tn.contract_by_elimination(&[0, 1, 2, 3, 4, 5]).unwrap(), direct);
            assert_eq!(tn.contract_by_elimination(&[3, 5, 1, 0, 4, 2]).unwrap(), direct);
        }
    }

    #[test]
    fn automorphism_equivariance() {
        // Rotation of the dodecahedron about the axis through P1 and P12.
        let pt = platonic(Solid::Dodecahedron);
        let sigma: Vec<usize> = (0..20).map(|v| (v / 5) * 5 + (v % 5 + 1) % 5).collect();
        let mapped: Vec<Vec<usize>> = pt.faces().iter().map(|c| c.iter().map(|&v| sigma[v]).collect()).collect();
        // sigma maps every face cycle onto a face cycle, preserving the cyclic order.
        let mut face_perm = vec![0; 12];
        for (a, m) in mapped.iter().enumerate() {
            let (b, shift) = (0..12)
                .find_map(|b| {
                    let c = pt.face(b);
                    (0..5).find(|&s| (0..5).all(|j| c[(j + s) % 5] == m[j])).map(|s| (b, s))
                })
                .expect("automorphism maps faces to faces");
            face_perm[a] = b;
            assert!(shift < 5);
        }
        let o = random_orientations(12, 5, 21);
        let tensor = catalog::ame52_table1();
        let original = AgreementContraction::uniform(pt.clone(), &tensor, &o, ContractionMode::Vertex)
            .unwrap()
            .contract()
            .unwrap();
        // Same physical assignment expressed on the relabeled solid.
        let relabeled = Polytope::custom("relabeled", 20, mapped).unwrap();
        let moved = AgreementContraction::uniform(relabeled, &tensor, &o, ContractionMode::Vertex)
            .unwrap()
            .contract()
            .unwrap();
        let mut inverse = vec![0; 20];
        for (v, &s) in sigma.iter().enumerate() {
            inverse[s] = v;
        }
        // moved(s) = original(s ∘ sigma): site j of `original` reads site sigma[j] of `moved`.
        assert_eq!(moved.permute_sites(&sigma).unwrap(), original);
        assert_eq!(original.permute_sites(&inverse).unwrap(), moved);
    }
}
