//! Simplicial sets in degeneracy normal form: a delta-complex core of
//! nondegenerate simplices plus on-demand enumeration of degenerate
//! simplices as pairs (surjection, core simplex).  Houses the functors
//! 𝔣 (forget degeneracies) and 𝔡 (freely add them) and the adjunction unit.

use std::fmt;

use crate::complex::{ComplexSpec, DeltaComplex, DeltaMap, SimplexRef, SimplexSpec};
use crate::report::ValidationReport;

/// An order-preserving surjection `[m] ↠ [n]`, stored by its values.
/// These classify iterated degeneracy operators in normal form: the word
/// `s_{i_k} ... s_{i_1}` with `i_1 < ... < i_k` the repeated positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    values: Vec<usize>,
}

impl Surjection {
    pub fn identity(n: usize) -> Self {
        Surjection { values: (0..=n).collect() }
    }

    pub fn from_values(values: Vec<usize>) -> Option<Self> {
        if values.is_empty() || values[0] != 0 {
            return None;
        }
        for w in values.windows(2) {
            if w[1] != w[0] && w[1] != w[0] + 1 {
                return None;
            }
        }
        Some(Surjection { values })
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        *self.values.last().unwrap()
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Degeneracy indices in normal form, ascending: positions `t` with
    /// `η(t) = η(t+1)`.
    pub fn repeated_positions(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(t, _)| t)
            .collect()
    }

    /// `self ∘ inner` for `inner : [m] ↠ [k]`, `self : [k] ↠ [n]`.
    pub fn compose(&self, inner: &Surjection) -> Surjection {
        debug_assert_eq!(inner.target_dim(), self.source_dim());
        Surjection { values: inner.values.iter().map(|&t| self.values[t]).collect() }
    }

    /// `self ∘ δ_i : [m-1] -> [n]` factored as (surjection, deleted target
    /// vertices in descending order).
    pub fn compose_coface(&self, i: usize) -> (Surjection, Vec<usize>) {
        let m = self.source_dim();
        debug_assert!(i <= m);
        let composed: Vec<usize> =
            (0..m).map(|t| self.values[if t < i { t } else { t + 1 }]).collect();
        let n = self.target_dim();
        let mut present = vec![false; n + 1];
        for &v in &composed {
            present[v] = true;
        }
        let missing: Vec<usize> = (0..=n).rev().filter(|&v| !present[v]).collect();
        // renumber onto the image
        let mut rank = vec![0usize; n + 1];
        let mut r = 0;
        for v in 0..=n {
            if present[v] {
                rank[v] = r;
                r += 1;
            }
        }
        let values = composed.into_iter().map(|v| rank[v]).collect();
        (Surjection { values }, missing)
    }

    /// `self ∘ σ_j : [m+1] ↠ [n]`.
    pub fn compose_degeneracy(&self, j: usize) -> Surjection {
        let m = self.source_dim();
        debug_assert!(j <= m);
        let values = (0..=m + 1).map(|t| self.values[if t <= j { t } else { t - 1 }]).collect();
        Surjection { values }
    }

    /// All surjections `[m] ↠ [n]` in lexicographic order of their values.
    pub fn enumerate(m: usize, n: usize) -> Vec<Surjection> {
        if n > m {
            return Vec::new();
        }
        let mut out = Vec::new();
        // choose which of the m steps increase: exactly n of them
        fn rec(values: &mut Vec<usize>, m: usize, n: usize, out: &mut Vec<Surjection>) {
            if values.len() == m + 1 {
                if *values.last().unwrap() == n {
                    out.push(Surjection { values: values.clone() });
                }
                return;
            }
            let last = *values.last().unwrap();
            // staying flat first keeps lexicographic order
            if last + (m + 1 - values.len()) >= n + 1 {
                values.push(last);
                rec(values, m, n, out);
                values.pop();
            }
            if last < n {
                values.push(last + 1);
                rec(values, m, n, out);
                values.pop();
            }
        }
        let mut values = vec![0];
        rec(&mut values, m, n, &mut out);
        out
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "id")
        } else {
            for j in self.repeated_positions().iter().rev() {
                write!(f, "s{j}")?;
            }
            Ok(())
        }
    }
}

/// Number of order-preserving surjections `[m] ↠ [n]` (= C(m, n)).
pub fn surjection_count(m: usize, n: usize) -> u64 {
    if n > m {
        return 0;
    }
    // Pascal triangle, exact
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![1u64];
        for k in 1..row.len() {
            next.push(row[k - 1] + row[k]);
        }
        next.push(1);
        row = next;
    }
    row[n]
}

/// An m-simplex of 𝔡(core): a surjection word applied to a core simplex.
/// Unique by the Eilenberg-Zilber normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegeneratePair {
    pub word: Surjection,
    pub core: SimplexRef,
}

impl DegeneratePair {
    pub fn dim(&self) -> usize {
        self.word.source_dim()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.word.is_identity()
    }
}

/// A simplicial set presented as a delta-complex of nondegenerate simplices;
/// every simplex is a unique pair (surjection in normal form, core simplex),
/// enumerated on demand up to a dimension bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    core: DeltaComplex,
}

impl SimplicialSet {
    pub fn new(core: DeltaComplex) -> Self {
        SimplicialSet { core }
    }

    pub fn core(&self) -> &DeltaComplex {
        &self.core
    }

    /// All m-simplices: core dimension ascending, core order, then word order.
    pub fn simplices(&self, m: usize) -> Vec<DegeneratePair> {
        let mut out = Vec::new();
        for n in 0..=m.min(self.core.dim()) {
            for i in 0..self.core.size(n) {
                for word in Surjection::enumerate(m, n) {
                    out.push(DegeneratePair { word, core: (n, i) });
                }
            }
        }
        out
    }

    pub fn simplex_count(&self, m: usize) -> usize {
        (0..=m.min(self.core.dim()))
            .map(|n| surjection_count(m, n) as usize * self.core.size(n))
            .sum()
    }

    /// `F_i` on pairs: compose with the coface, peel off the epi part, and
    /// push the deleted vertices into iterated faces of the core.
    pub fn face(&self, p: &DegeneratePair, i: usize) -> DegeneratePair {
        let (word, missing) = p.word.compose_coface(i);
        let mut core = p.core;
        for v in missing {
            core = self.core.face(core, v);
        }
        DegeneratePair { word, core }
    }

    /// `s_j` on pairs: compose the word with `σ_j`.
    pub fn degeneracy(&self, p: &DegeneratePair, j: usize) -> DegeneratePair {
        DegeneratePair { word: p.word.compose_degeneracy(j), core: p.core }
    }

    /// Deterministic label: the degeneracy word in normal form (outermost
    /// first) prefixed to the core id; nondegenerate pairs keep the core id.
    pub fn label(&self, p: &DegeneratePair) -> String {
        let id = self.core.id(p.core);
        let reps = p.word.repeated_positions();
        if reps.is_empty() {
            id.to_string()
        } else {
            let word: String = reps.iter().rev().map(|j| format!("s{j}")).collect();
            format!("{word}.{id}")
        }
    }

    /// The forgetful functor 𝔣: every pair becomes a nondegenerate simplex
    /// of a delta-complex, faces computed from the pair arithmetic.
    pub fn forget(&self, max_dim: usize) -> DeltaComplex {
        self.forget_with_origins(max_dim).0
    }

    /// `forget` plus the pair each produced simplex came from.
    pub fn forget_with_origins(&self, max_dim: usize) -> (DeltaComplex, Vec<Vec<DegeneratePair>>) {
        assert!(
            max_dim >= self.core.dim(),
            "max_dim {} below core dimension {}",
            max_dim,
            self.core.dim()
        );
        let mut simplices = Vec::new();
        let mut origins = Vec::new();
        for m in 0..=max_dim {
            let pairs = self.simplices(m);
            for p in &pairs {
                let faces = if m == 0 {
                    Vec::new()
                } else {
                    (0..=m).map(|i| self.label(&self.face(p, i))).collect()
                };
                simplices.push(SimplexSpec { id: self.label(p), dim: m, faces });
            }
            origins.push(pairs);
        }
        let c = ComplexSpec::new(format!("f({})", self.core.name()), simplices)
            .build()
            .expect("forgetful image satisfies the face identities");
        (c, origins)
    }
}

/// The functor 𝔡: equips a delta-complex with all free degeneracies.  The
/// result is enumerable in any dimension; `max_dim` is recorded nowhere —
/// callers bound enumeration explicitly.
pub fn freely_degenerate(x: &DeltaComplex, _max_dim: usize) -> SimplicialSet {
    SimplicialSet::new(x.clone())
}

/// The natural inclusion `ι : X -> 𝔣𝔡(X)` onto the nondegenerate part.
pub fn free_inclusion(x: &DeltaComplex, max_dim: usize) -> DeltaMap {
    let fd = freely_degenerate(x, max_dim).forget(max_dim);
    let pairs: Vec<(String, String)> =
        x.simplices().map(|r| (x.id(r).to_string(), x.id(r).to_string())).collect();
    DeltaMap::from_pairs(x, &fd, &pairs).expect("promoted copies keep their labels")
}

/// A simplicial map between bounded enumerations of two simplicial sets,
/// stored pairwise; validation checks faces and degeneracies.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    max_dim: usize,
    /// images parallel to `source.simplices(m)` for `m <= max_dim`
    images: Vec<Vec<DegeneratePair>>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialSet,
        target: SimplicialSet,
        max_dim: usize,
        images: Vec<Vec<DegeneratePair>>,
    ) -> Self {
        SimplicialMap { source, target, max_dim, images }
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn apply(&self, m: usize, index: usize) -> &DegeneratePair {
        &self.images[m][index]
    }

    fn index_of(&self, m: usize, p: &DegeneratePair) -> usize {
        // deterministic enumeration makes this a simple scan; sets are small
        self.source
            .simplices(m)
            .iter()
            .position(|q| q == p)
            .expect("pair belongs to the source enumeration")
    }

    /// Checks commutation with every face operator (all dims <= max_dim) and
    /// every degeneracy operator (dims < max_dim, so images stay in bound).
    pub fn validate(&self) -> ValidationReport<crate::complex::MapViolation> {
        use crate::complex::MapViolation;
        let mut report = ValidationReport::new();
        for m in 0..=self.max_dim {
            let pairs = self.source.simplices(m);
            for (idx, p) in pairs.iter().enumerate() {
                let img = &self.images[m][idx];
                if m > 0 {
                    for i in 0..=m {
                        let fp = self.source.face(p, i);
                        let f_then_map = self.apply(m - 1, self.index_of(m - 1, &fp));
                        let map_then_f = self.target.face(img, i);
                        if *f_then_map != map_then_f {
                            report.push(MapViolation::FaceMismatch {
                                simplex: self.source.label(p),
                                face_index: i,
                                expected: self.target.label(f_then_map),
                                actual: self.target.label(&map_then_f),
                            });
                        }
                    }
                }
                if m < self.max_dim {
                    for j in 0..=m {
                        let sp = self.source.degeneracy(p, j);
                        let s_then_map = self.apply(m + 1, self.index_of(m + 1, &sp));
                        let map_then_s = self.target.degeneracy(img, j);
                        if *s_then_map != map_then_s {
                            report.push(MapViolation::DegeneracyMismatch {
                                simplex: self.source.label(p),
                                index: j,
                                expected: self.target.label(s_then_map),
                                actual: self.target.label(&map_then_s),
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// True when every target simplex of dimension <= max_dim is hit.
    pub fn is_surjective_up_to(&self, max_dim: usize) -> bool {
        for m in 0..=max_dim.min(self.max_dim) {
            let targets = self.target.simplices(m);
            for t in &targets {
                if !self.images[m].iter().any(|q| q == t) {
                    return false;
                }
            }
        }
        true
    }
}

/// The unit of the adjunction, `g : 𝔡∘𝔣(S) -> S`: a promoted simplex goes
/// back to the pair it came from, and a freely added degeneracy of it goes
/// to the composite degeneracy in S.
pub fn adjunction_unit(s: &SimplicialSet, max_dim: usize) -> SimplicialMap {
    let (fd, origins) = s.forget_with_origins(max_dim);
    let source = SimplicialSet::new(fd);
    let mut images = Vec::new();
    for m in 0..=max_dim {
        let mut level = Vec::new();
        for p in source.simplices(m) {
            // p.core is a simplex of 𝔣(S), i.e. an original pair (word, core)
            let origin = &origins[p.core.0][p.core.1];
            level.push(DegeneratePair {
                word: origin.word.compose(&p.word),
                core: origin.core,
            });
        }
        images.push(level);
    }
    SimplicialMap::new(source, s.clone(), max_dim, images)
}
