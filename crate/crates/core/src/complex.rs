//! Finite delta-complexes: graded sets of simplices with face operators
//! `F_i` subject to the simplicial face identity `F_i F_j = F_{j-1} F_i`
//! for `i < j`, and maps between them.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::report::ValidationReport;

/// Position of a simplex inside a complex: `(dimension, index)`.
pub type SimplexRef = (usize, usize);

/// Raw description of one simplex: caller-chosen id plus the ids of its
/// faces, `faces[i] = F_i`.  Vertices have no faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSpec {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<String>,
}

impl SimplexSpec {
    pub fn vertex(id: impl Into<String>) -> Self {
        SimplexSpec { id: id.into(), dim: 0, faces: Vec::new() }
    }

    pub fn new(id: impl Into<String>, dim: usize, faces: &[&str]) -> Self {
        SimplexSpec {
            id: id.into(),
            dim,
            faces: faces.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Unvalidated complex data, as parsed from a file or assembled by hand.
#[derive(Debug, Clone, Default)]
pub struct ComplexSpec {
    pub name: String,
    pub simplices: Vec<SimplexSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexViolation {
    DuplicateId { id: String },
    DanglingFace { simplex: String, face_index: usize, face_id: String },
    FaceDimension { simplex: String, face_index: usize, face_id: String },
    FaceCount { simplex: String, expected: usize, actual: usize },
    /// `F_i F_j != F_{j-1} F_i` on `simplex` (i < j); `left`/`right` are the
    /// two iterated-face ids that should have agreed.
    FaceIdentity { simplex: String, i: usize, j: usize, left: String, right: String },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexViolation::DuplicateId { id } => write!(f, "duplicate simplex id `{id}`"),
            ComplexViolation::DanglingFace { simplex, face_index, face_id } => {
                write!(f, "face F_{face_index} of `{simplex}` names missing simplex `{face_id}`")
            }
            ComplexViolation::FaceDimension { simplex, face_index, face_id } => write!(
                f,
                "face F_{face_index} of `{simplex}` names `{face_id}` of the wrong dimension"
            ),
            ComplexViolation::FaceCount { simplex, expected, actual } => {
                write!(f, "`{simplex}` lists {actual} faces, expected {expected}")
            }
            ComplexViolation::FaceIdentity { simplex, i, j, left, right } => write!(
                f,
                "face identity fails on `{simplex}`: F_{i}F_{j} = `{left}` but F_{}F_{i} = `{right}`",
                j - 1
            ),
        }
    }
}

impl ComplexSpec {
    pub fn new(name: impl Into<String>, simplices: Vec<SimplexSpec>) -> Self {
        ComplexSpec { name: name.into(), simplices }
    }

    /// Checks ids, face references and the simplicial face identities.
    /// Violations are report entries, never failures.
    pub fn validate(&self) -> ValidationReport<ComplexViolation> {
        let mut report = ValidationReport::new();
        let mut seen: HashMap<&str, (usize, usize)> = HashMap::new();
        for (k, s) in self.simplices.iter().enumerate() {
            if seen.insert(s.id.as_str(), (s.dim, k)).is_some() {
                report.push(ComplexViolation::DuplicateId { id: s.id.clone() });
            }
        }
        let by_id: HashMap<&str, &SimplexSpec> =
            self.simplices.iter().map(|s| (s.id.as_str(), s)).collect();

        // resolve one face, reporting reference problems at most once each
        let face_of = |s: &SimplexSpec, i: usize| -> Option<&SimplexSpec> {
            let id = s.faces.get(i)?;
            let t = by_id.get(id.as_str())?;
            (s.dim >= 1 && t.dim + 1 == s.dim).then_some(*t)
        };

        for s in &self.simplices {
            let expected = if s.dim == 0 { 0 } else { s.dim + 1 };
            if s.faces.len() != expected {
                report.push(ComplexViolation::FaceCount {
                    simplex: s.id.clone(),
                    expected,
                    actual: s.faces.len(),
                });
            }
            for (i, fid) in s.faces.iter().enumerate().take(expected) {
                match by_id.get(fid.as_str()) {
                    None => report.push(ComplexViolation::DanglingFace {
                        simplex: s.id.clone(),
                        face_index: i,
                        face_id: fid.clone(),
                    }),
                    Some(t) if s.dim == 0 || t.dim + 1 != s.dim => {
                        report.push(ComplexViolation::FaceDimension {
                            simplex: s.id.clone(),
                            face_index: i,
                            face_id: fid.clone(),
                        })
                    }
                    Some(_) => {}
                }
            }
            if s.dim >= 2 {
                for j in 1..=s.dim {
                    for i in 0..j {
                        let lhs = face_of(s, j).and_then(|t| t.faces.get(i));
                        let rhs = face_of(s, i).and_then(|t| t.faces.get(j - 1));
                        if let (Some(l), Some(r)) = (lhs, rhs) {
                            if l != r {
                                report.push(ComplexViolation::FaceIdentity {
                                    simplex: s.id.clone(),
                                    i,
                                    j,
                                    left: l.clone(),
                                    right: r.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        report
    }

    /// Validates and, if clean, produces an indexed [`DeltaComplex`].
    pub fn build(&self) -> Result<DeltaComplex, Error> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidComplex { name: self.name.clone(), report });
        }
        let max_dim = self.simplices.iter().map(|s| s.dim).max().unwrap_or(0);
        let mut ids: Vec<Vec<String>> = vec![Vec::new(); max_dim + 1];
        let mut lookup: HashMap<String, SimplexRef> = HashMap::new();
        for s in &self.simplices {
            lookup.insert(s.id.clone(), (s.dim, ids[s.dim].len()));
            ids[s.dim].push(s.id.clone());
        }
        let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_dim + 1];
        for s in &self.simplices {
            if s.dim == 0 {
                continue;
            }
            let row: Vec<usize> = s.faces.iter().map(|fid| lookup[fid].1).collect();
            faces[s.dim].push(row);
        }
        // face rows were pushed in file order, which matches the ids order
        Ok(DeltaComplex { name: self.name.clone(), ids, faces, lookup })
    }
}

/// A finite, well-formed delta-complex.  Construction goes through
/// [`ComplexSpec::build`], so every face reference resolves and the face
/// identities hold.
#[derive(Debug, Clone)]
pub struct DeltaComplex {
    name: String,
    ids: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<usize>>>,
    lookup: HashMap<String, SimplexRef>,
}

impl PartialEq for DeltaComplex {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.same_structure(other)
    }
}
impl Eq for DeltaComplex {}

impl DeltaComplex {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Top dimension carrying at least one simplex.
    pub fn dim(&self) -> usize {
        (0..self.ids.len()).rev().find(|&d| !self.ids[d].is_empty()).unwrap_or(0)
    }

    pub fn size(&self, d: usize) -> usize {
        self.ids.get(d).map_or(0, Vec::len)
    }

    pub fn simplex_counts(&self) -> Vec<usize> {
        (0..=self.dim()).map(|d| self.size(d)).collect()
    }

    pub fn total_size(&self) -> usize {
        self.ids.iter().map(Vec::len).sum()
    }

    pub fn id(&self, r: SimplexRef) -> &str {
        &self.ids[r.0][r.1]
    }

    pub fn ids(&self, d: usize) -> &[String] {
        self.ids.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn lookup(&self, id: &str) -> Option<SimplexRef> {
        self.lookup.get(id).copied()
    }

    /// `F_k` of the simplex at `r`; `r.0 >= 1`.
    pub fn face(&self, r: SimplexRef, k: usize) -> SimplexRef {
        (r.0 - 1, self.faces[r.0][r.1][k])
    }

    /// Iterated face keeping exactly the vertex positions in `keep`
    /// (a strictly increasing subset of `0..=dim`).  Positions outside
    /// `keep` are deleted from the largest down, so indices never shift.
    pub fn sub_simplex(&self, r: SimplexRef, keep: &[usize]) -> SimplexRef {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!keep.is_empty() && *keep.last().unwrap() <= r.0);
        let mut cur = r;
        let mut kept = keep.len();
        for v in (0..=r.0).rev() {
            if kept > 0 && keep[kept - 1] == v {
                kept -= 1;
            } else {
                cur = self.face(cur, v);
            }
        }
        cur
    }

    /// The `j`-th vertex of the simplex at `r`.
    pub fn vertex(&self, r: SimplexRef, j: usize) -> SimplexRef {
        self.sub_simplex(r, &[j])
    }

    pub fn simplices(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        (0..self.ids.len()).flat_map(move |d| (0..self.size(d)).map(move |i| (d, i)))
    }

    /// Same simplices and faces, names ignored.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.ids == other.ids && self.faces == other.faces
    }

    /// Re-checks the full contract (useful after hand construction).
    pub fn validate(&self) -> ValidationReport<ComplexViolation> {
        self.to_spec().validate()
    }

    pub fn to_spec(&self) -> ComplexSpec {
        let mut simplices = Vec::new();
        for d in 0..self.ids.len() {
            for i in 0..self.size(d) {
                simplices.push(SimplexSpec {
                    id: self.ids[d][i].clone(),
                    dim: d,
                    faces: if d == 0 {
                        Vec::new()
                    } else {
                        self.faces[d][i].iter().map(|&k| self.ids[d - 1][k].clone()).collect()
                    },
                });
            }
        }
        ComplexSpec { name: self.name.clone(), simplices }
    }

    pub fn renamed(&self, name: impl Into<String>) -> DeltaComplex {
        let mut c = self.clone();
        c.name = name.into();
        c
    }
}

fn vertex_label(vertices: &[usize], big: bool) -> String {
    if big {
        vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")
    } else {
        vertices.iter().map(|v| v.to_string()).collect()
    }
}

/// The standard n-simplex: simplices are the nonempty subsets of `{0..n}`,
/// labelled by their vertex tuples; `F_i` deletes the i-th vertex.
pub fn standard_simplex(n: usize) -> DeltaComplex {
    let big = n > 9;
    let mut simplices = Vec::new();
    // subsets by increasing size then lexicographic vertex tuples
    let mut subsets: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 0..=n {
        let mut next = Vec::new();
        for s in &subsets {
            next.push(s.clone());
            let mut t = s.clone();
            t.push(v);
            next.push(t);
        }
        subsets = next;
    }
    subsets.retain(|s| !s.is_empty());
    subsets.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    for s in &subsets {
        let faces = if s.len() == 1 {
            Vec::new()
        } else {
            (0..s.len())
                .map(|i| {
                    let mut t = s.clone();
                    t.remove(i);
                    vertex_label(&t, big)
                })
                .collect()
        };
        simplices.push(SimplexSpec { id: vertex_label(s, big), dim: s.len() - 1, faces });
    }
    ComplexSpec::new(format!("delta{n}"), simplices)
        .build()
        .expect("standard simplex is valid")
}

/// All simplices of dimension `<= k`, faces restricted.
pub fn skeleton(x: &DeltaComplex, k: usize) -> DeltaComplex {
    let spec = x.to_spec();
    let simplices = spec.simplices.into_iter().filter(|s| s.dim <= k).collect();
    ComplexSpec::new(format!("{}_skel{}", x.name(), k), simplices)
        .build()
        .expect("skeleton of a valid complex is valid")
}

/// Raw map data: per-simplex assignments by id.
#[derive(Debug, Clone, Default)]
pub struct MapSpec {
    pub assignment: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapViolation {
    Unassigned { simplex: String },
    /// `f(F_i s) != F_i(f s)`
    FaceMismatch { simplex: String, face_index: usize, expected: String, actual: String },
    /// degeneracy analogue, for simplicial maps
    DegeneracyMismatch { simplex: String, index: usize, expected: String, actual: String },
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapViolation::Unassigned { simplex } => write!(f, "`{simplex}` has no image"),
            MapViolation::FaceMismatch { simplex, face_index, expected, actual } => write!(
                f,
                "map does not commute with F_{face_index} on `{simplex}`: f(F_{face_index}) = `{expected}` but F_{face_index}(f) = `{actual}`"
            ),
            MapViolation::DegeneracyMismatch { simplex, index, expected, actual } => write!(
                f,
                "map does not commute with s_{index} on `{simplex}`: f(s_{index}) = `{expected}` but s_{index}(f) = `{actual}`"
            ),
        }
    }
}

/// A (possibly partial) dimension-preserving assignment between two
/// delta-complexes.  [`DeltaMap::validate`] reports missing assignments and
/// failures to commute with the face operators.
#[derive(Debug, Clone)]
pub struct DeltaMap {
    source: DeltaComplex,
    target: DeltaComplex,
    assignment: Vec<Vec<Option<usize>>>,
}

impl DeltaMap {
    pub fn identity(x: &DeltaComplex) -> DeltaMap {
        let assignment = (0..=x.dim()).map(|d| (0..x.size(d)).map(Some).collect()).collect();
        DeltaMap { source: x.clone(), target: x.clone(), assignment }
    }

    /// Builds a map from id pairs.  Ids must exist and dimensions must agree;
    /// simplices may be left unassigned (reported by `validate`).
    pub fn from_pairs(
        source: &DeltaComplex,
        target: &DeltaComplex,
        pairs: &[(String, String)],
    ) -> Result<DeltaMap, Error> {
        let mut assignment: Vec<Vec<Option<usize>>> =
            (0..=source.dim()).map(|d| vec![None; source.size(d)]).collect();
        for (from, to) in pairs {
            let r = source.lookup(from).ok_or_else(|| Error::UnknownSimplex(from.clone()))?;
            let s = target.lookup(to).ok_or_else(|| Error::UnknownSimplex(to.clone()))?;
            if r.0 != s.0 {
                return Err(Error::InvalidMap(format!(
                    "`{from}` (dim {}) cannot map to `{to}` (dim {})",
                    r.0, s.0
                )));
            }
            assignment[r.0][r.1] = Some(s.1);
        }
        Ok(DeltaMap { source: source.clone(), target: target.clone(), assignment })
    }

    pub fn source(&self) -> &DeltaComplex {
        &self.source
    }

    pub fn target(&self) -> &DeltaComplex {
        &self.target
    }

    pub fn apply(&self, r: SimplexRef) -> Option<SimplexRef> {
        self.assignment.get(r.0)?.get(r.1).copied().flatten().map(|i| (r.0, i))
    }

    pub fn apply_id(&self, id: &str) -> Option<&str> {
        let r = self.source.lookup(id)?;
        self.apply(r).map(|s| self.target.id(s))
    }

    /// Lists every unassigned simplex and every face-commutation failure.
    pub fn validate(&self) -> ValidationReport<MapViolation> {
        let mut report = ValidationReport::new();
        for r in self.source.simplices().collect::<Vec<_>>() {
            let Some(img) = self.apply(r) else {
                report.push(MapViolation::Unassigned { simplex: self.source.id(r).to_string() });
                continue;
            };
            if r.0 == 0 {
                continue;
            }
            for k in 0..=r.0 {
                let f_then_map = self.apply(self.source.face(r, k));
                let map_then_f = self.target.face(img, k);
                match f_then_map {
                    Some(x) if x == map_then_f => {}
                    Some(x) => report.push(MapViolation::FaceMismatch {
                        simplex: self.source.id(r).to_string(),
                        face_index: k,
                        expected: self.target.id(x).to_string(),
                        actual: self.target.id(map_then_f).to_string(),
                    }),
                    // unassigned face is already reported on the face itself
                    None => {}
                }
            }
        }
        report
    }

    /// `g.compose(f)` is `g ∘ f`; requires `f.target` and `g.source` to have
    /// the same structure, and both maps total on the relevant simplices.
    pub fn compose(&self, inner: &DeltaMap) -> Result<DeltaMap, Error> {
        if !inner.target.same_structure(&self.source) {
            return Err(Error::ComplexMismatch(format!(
                "`{}` -> `{}` does not feed `{}` -> `{}`",
                inner.source.name(),
                inner.target.name(),
                self.source.name(),
                self.target.name()
            )));
        }
        let mut assignment: Vec<Vec<Option<usize>>> =
            (0..=inner.source.dim()).map(|d| vec![None; inner.source.size(d)]).collect();
        for r in inner.source.simplices().collect::<Vec<_>>() {
            if let Some(mid) = inner.apply(r) {
                assignment[r.0][r.1] = self.apply(mid).map(|s| s.1);
            }
        }
        Ok(DeltaMap { source: inner.source.clone(), target: self.target.clone(), assignment })
    }

    /// True when the map is a bijection in every dimension.
    pub fn is_isomorphism(&self) -> bool {
        if !self.validate().is_valid() {
            return false;
        }
        (0..=self.source.dim().max(self.target.dim())).all(|d| {
            let n = self.source.size(d);
            if n != self.target.size(d) {
                return false;
            }
            let mut hit = vec![false; n];
            for i in 0..n {
                match self.assignment[d][i] {
                    Some(j) if !hit[j] => hit[j] = true,
                    _ => return false,
                }
            }
            true
        })
    }

    pub fn pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for r in self.source.simplices().collect::<Vec<_>>() {
            if let Some(s) = self.apply(r) {
                out.push((self.source.id(r).to_string(), self.target.id(s).to_string()));
            }
        }
        out
    }
}

/// The map on complexes spec'd by `validate_delta` in the interface: runs the
/// id-level validation of a raw spec.
pub fn validate_delta(spec: &ComplexSpec) -> ValidationReport<ComplexViolation> {
    spec.validate()
}

/// The coface inclusion `d_i : Δ^{n-1} -> Δ^n` (vertex `i` of the target is
/// skipped).
pub fn coface_map(n: usize, i: usize) -> DeltaMap {
    assert!(n >= 1 && i <= n);
    let src = standard_simplex(n - 1);
    let tgt = standard_simplex(n);
    let mut pairs = Vec::new();
    for r in src.simplices().collect::<Vec<_>>() {
        let id = src.id(r);
        let verts: Vec<usize> = id
            .split(if n > 10 { "-" } else { "" })
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().unwrap())
            .collect();
        let image: Vec<usize> = verts.iter().map(|&v| if v < i { v } else { v + 1 }).collect();
        pairs.push((id.to_string(), vertex_label(&image, n > 9)));
    }
    DeltaMap::from_pairs(&src, &tgt, &pairs).expect("coface ids resolve")
}

/// The delta-map `Δ^n -> X` classifying the simplex at `r`: each sub-simplex
/// of the standard simplex goes to the corresponding iterated face.
pub fn simplex_inclusion(x: &DeltaComplex, r: SimplexRef) -> DeltaMap {
    let n = r.0;
    let src = standard_simplex(n);
    let mut pairs = Vec::new();
    for s in src.simplices().collect::<Vec<_>>() {
        let id = src.id(s);
        let verts: Vec<usize> = id
            .split(if n > 10 { "-" } else { "" })
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().unwrap())
            .collect();
        let image = x.sub_simplex(r, &verts);
        pairs.push((id.to_string(), x.id(image).to_string()));
    }
    DeltaMap::from_pairs(&src, x, &pairs).expect("inclusion ids resolve")
}
