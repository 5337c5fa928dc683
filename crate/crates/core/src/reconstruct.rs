//! The functor hom(★, C) from Steenrod coalgebras back to delta-complexes,
//! restricted to dimensions <= 2: an n-simplex of the output is a Steenrod
//! coalgebra morphism N(Δ^n) -> C.  For canonical coalgebras this recovers
//! the 2-skeleton on the nose; faces are duals of coface inclusions.

use std::collections::BTreeMap;
use std::fmt;

use crate::chain::{normalized_chains, verify_chain_map, Chain, ChainComplex, ChainMap};
use crate::complex::{skeleton, standard_simplex, ComplexSpec, DeltaComplex, DeltaMap, SimplexSpec};
use crate::error::Error;
use crate::report::ValidationReport;
use crate::steenrod::{canonical_structure, verify_morphism, SteenrodStructure};

/// A surviving candidate morphism `N(Δ^n) -> C`, presented by the image of
/// the top generator (a signed carrier generator) together with the full
/// forced assignment of the standard simplex's generators.
#[derive(Debug, Clone)]
pub struct SimplexWitness {
    pub dim: usize,
    pub target: String,
    pub sign: i64,
    /// images keyed by the standard-simplex labels "0", "01", "012", ...
    pub images: BTreeMap<String, Chain<String>>,
}

impl SimplexWitness {
    pub fn label(&self) -> String {
        if self.sign >= 0 {
            format!("w({})", self.target)
        } else {
            format!("w(-{})", self.target)
        }
    }

    /// Image of the j-th vertex, when it is a single +1 generator.
    pub fn vertex_image(&self, j: usize) -> Option<String> {
        let key = j.to_string();
        let (g, c) = self.images.get(&key)?.single_generator()?;
        (c == 1).then(|| g.clone())
    }

    /// Image of the i-th face (dimension n-1 sub-simplex), when it is a
    /// single +1 generator.
    pub fn face_target(&self, i: usize) -> Option<String> {
        let verts: Vec<usize> = (0..=self.dim).filter(|&v| v != i).collect();
        let key: String = verts.iter().map(|v| v.to_string()).collect();
        let (g, c) = self.images.get(&key)?.single_generator()?;
        (c == 1).then(|| g.clone())
    }

    /// The witness as an honest chain map `N(Δ^n) -> C`.
    pub fn to_chain_map(&self, carrier: &ChainComplex<String>) -> Result<ChainMap, Error> {
        let source = normalized_chains(&standard_simplex(self.dim));
        let mut images = Vec::new();
        for d in 0..=self.dim {
            let mut level = Vec::new();
            for g in source.basis(d) {
                let img = self
                    .images
                    .get(g)
                    .ok_or_else(|| Error::InvalidChainMap(format!("missing image of `{g}`")))?;
                level.push(img.clone());
            }
            images.push(level);
        }
        ChainMap::new(source, carrier.clone(), images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// The forced-assignment reading from ξ_0/ξ_1 has no solution.
    NotForced(String),
    /// The forced assignment is not a chain map.
    ChainMap,
    /// The morphism square fails first at this i.
    Morphism { i: usize },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NotForced(why) => write!(f, "no forced assignment: {why}"),
            RejectReason::ChainMap => write!(f, "forced assignment is not a chain map"),
            RejectReason::Morphism { i } => write!(f, "rejected at i = {i}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RejectedCandidate {
    pub dim: usize,
    pub target: String,
    pub sign: i64,
    pub reason: RejectReason,
}

/// Witnesses that survive verification plus the rejected signed candidates.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub dim: usize,
    pub witnesses: Vec<SimplexWitness>,
    pub rejected: Vec<RejectedCandidate>,
}

/// Reads the assignment a morphism with `top ↦ sign·target` is forced to
/// have, from the structure's ξ_0 (and, in dimension 2, ξ_1) components, as
/// in the uniqueness argument for low-dimensional witnesses.
fn forced_assignment(
    s: &SteenrodStructure,
    n: usize,
    target: &str,
    sign: i64,
) -> Result<BTreeMap<String, Chain<String>>, String> {
    let carrier = s.carrier();
    let mut images = BTreeMap::new();
    let top_label: String = (0..=n).map(|v| v.to_string()).collect();
    let mut top = Chain::zero(n);
    top.add_term(target.to_string(), sign);
    images.insert(top_label, top);

    // collect the (p,q)-degree part of a tensor chain, demanding every term
    // have the given factor equal to the target; returns the other factor
    let part = |value: &crate::chain::TensorChain,
                p: usize,
                q: usize,
                target_on_right: bool|
     -> Result<Chain<String>, String> {
        let mut out = Chain::zero(if target_on_right { p } else { q });
        for (t, c) in value.terms() {
            if t.left_degree != p || t.right_degree != q {
                continue;
            }
            if target_on_right {
                if t.right != target {
                    return Err(format!(
                        "ξ-component has a ({p},{q})-term {t} whose right factor is not the target"
                    ));
                }
                out.add_term(t.left.clone(), c);
            } else {
                if t.left != target {
                    return Err(format!(
                        "ξ-component has a ({p},{q})-term {t} whose left factor is not the target"
                    ));
                }
                out.add_term(t.right.clone(), c);
            }
        }
        Ok(out)
    };

    let xi0 = s.component(0, target).map_err(|e| e.to_string())?;
    match n {
        0 => {}
        1 => {
            // AW forces both vertex images: (0,1)-part = f(0)⊗target,
            // (1,0)-part = target⊗f(1); the candidate sign cancels.
            images.insert("0".into(), part(&xi0, 0, 1, true)?);
            images.insert("1".into(), part(&xi0, 1, 0, false)?);
        }
        2 => {
            images.insert("0".into(), part(&xi0, 0, 2, true)?);
            images.insert("2".into(), part(&xi0, 2, 0, false)?);
            let xi1 = s.component(1, target).map_err(|e| e.to_string())?;
            images.insert("02".into(), part(&xi1, 1, 2, true)?);
            // the (1,1)-part of AW is a single ±1 pure tensor f(01)⊗f(12)
            let mid: Vec<_> = xi0
                .terms()
                .filter(|(t, _)| t.left_degree == 1 && t.right_degree == 1)
                .collect();
            let [(t, c)] = mid.as_slice() else {
                return Err("the (1,1)-part of ξ_0 is not a single term".into());
            };
            if *c != 1 && *c != -1 {
                return Err("the (1,1)-part of ξ_0 has a non-unit coefficient".into());
            }
            let f01 = Chain::from_terms(1, [(t.left.clone(), c * sign)]);
            let f12 = Chain::generator(1, t.right.clone());
            // middle vertex from the chain condition f(1) = f(0) + ∂f(01)
            let mut f1 = images["0"].clone();
            f1.add(&carrier.boundary(&f01), 1);
            images.insert("01".into(), f01);
            images.insert("12".into(), f12);
            images.insert("1".into(), f1);
        }
        _ => return Err(format!("witness dimension {n} is out of range (only n <= 2)")),
    }
    Ok(images)
}

/// Enumerates the n-simplices of hom(★, C) target-first: for every signed
/// degree-n generator, builds the forced candidate morphism and keeps it
/// exactly when it passes the chain-map check and the morphism square for
/// all i <= n.  Rejected candidates are returned with the failing stage.
pub fn enumerate_simplices(
    c: &ChainComplex<String>,
    s: &SteenrodStructure,
    n: usize,
) -> Result<Enumeration, Error> {
    if c != s.carrier() {
        return Err(Error::CarrierMismatch(format!(
            "`{}` is not the structure's carrier `{}`",
            c.name(),
            s.carrier().name()
        )));
    }
    if n > 2 {
        return Err(Error::DegreeMismatch { expected: 2, actual: n });
    }
    let std_structure = canonical_structure(&standard_simplex(n));
    let mut witnesses = Vec::new();
    let mut rejected = Vec::new();
    for g in c.basis(n) {
        for sign in [1i64, -1] {
            let reject = |reason: RejectReason, rejected: &mut Vec<RejectedCandidate>| {
                rejected.push(RejectedCandidate {
                    dim: n,
                    target: g.clone(),
                    sign,
                    reason,
                });
            };
            let images = match forced_assignment(s, n, g, sign) {
                Ok(images) => images,
                Err(why) => {
                    reject(RejectReason::NotForced(why), &mut rejected);
                    continue;
                }
            };
            let witness = SimplexWitness { dim: n, target: g.clone(), sign, images };
            let f = match witness.to_chain_map(c) {
                Ok(f) => f,
                Err(e) => {
                    reject(RejectReason::NotForced(e.to_string()), &mut rejected);
                    continue;
                }
            };
            if !verify_chain_map(&f).is_valid() {
                reject(RejectReason::ChainMap, &mut rejected);
                continue;
            }
            let cert = verify_morphism(&f, &std_structure, s, n)?;
            match cert.violations.iter().map(|v| v.i).min() {
                Some(i) => reject(RejectReason::Morphism { i }, &mut rejected),
                None => witnesses.push(witness),
            }
        }
    }
    Ok(Enumeration { dim: n, witnesses, rejected })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconstructIssue {
    /// A witness's face image has no matching witness (or is not a single
    /// +1 generator) — the coalgebra is not of canonical delta-complex form.
    FaceLookup { witness: String, face_index: usize },
}

impl fmt::Display for ReconstructIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructIssue::FaceLookup { witness, face_index } => {
                write!(f, "face F_{face_index} of witness {witness} has no witness target")
            }
        }
    }
}

/// hom(★, C) in dimensions 0..2 with faces read off the witnesses.
#[derive(Debug, Clone)]
pub struct ReconstructedComplex {
    pub witnesses: Vec<Enumeration>,
    pub issues: Vec<ReconstructIssue>,
    /// Present exactly when every face lookup succeeded.
    pub complex: Option<DeltaComplex>,
}

impl ReconstructedComplex {
    pub fn witness_counts(&self) -> Vec<usize> {
        self.witnesses.iter().map(|e| e.witnesses.len()).collect()
    }

    pub fn find_witness(&self, dim: usize, target: &str) -> Option<&SimplexWitness> {
        self.witnesses[dim].witnesses.iter().find(|w| w.target == target && w.sign == 1)
    }
}

/// Builds the reconstructed 2-skeleton of a Steenrod coalgebra.  Face-lookup
/// failures are reported in `issues` rather than failing: they signal a
/// non-canonical coalgebra.
pub fn reconstruct_2_skeleton(
    c: &ChainComplex<String>,
    s: &SteenrodStructure,
) -> Result<ReconstructedComplex, Error> {
    let top = c.max_degree().min(2);
    let mut witnesses = Vec::new();
    for n in 0..=2usize {
        if n <= top {
            witnesses.push(enumerate_simplices(c, s, n)?);
        } else {
            witnesses.push(Enumeration { dim: n, witnesses: Vec::new(), rejected: Vec::new() });
        }
    }
    let mut issues = Vec::new();
    let mut simplices = Vec::new();
    for n in 0..=2usize {
        for w in &witnesses[n].witnesses {
            let mut faces = Vec::new();
            let mut ok = true;
            if n > 0 {
                for i in 0..=n {
                    let face_witness = w
                        .face_target(i)
                        .and_then(|t| {
                            witnesses[n - 1]
                                .witnesses
                                .iter()
                                .find(|u| u.target == t && u.sign == 1)
                                .map(|u| u.label())
                        });
                    match face_witness {
                        Some(label) => faces.push(label),
                        None => {
                            issues.push(ReconstructIssue::FaceLookup {
                                witness: w.label(),
                                face_index: i,
                            });
                            ok = false;
                        }
                    }
                }
            }
            if ok {
                simplices.push(SimplexSpec { id: w.label(), dim: n, faces });
            }
        }
    }
    let complex = if issues.is_empty() {
        Some(
            ComplexSpec::new(format!("hom(*,{})", c.name()), simplices)
                .build()
                .map_err(|e| Error::InvalidMap(format!("reconstructed complex invalid: {e}")))?,
        )
    } else {
        None
    };
    Ok(ReconstructedComplex { witnesses, issues, complex })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitViolation {
    CountMismatch { dim: usize, expected: usize, actual: usize },
    MissingWitness { simplex: String },
    FaceMismatch { witness: String, face_index: usize, expected: String, actual: String },
    NegativeSurvivor { dim: usize, target: String },
    Issue(String),
}

impl fmt::Display for UnitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitViolation::CountMismatch { dim, expected, actual } => {
                write!(f, "dimension {dim}: {actual} witnesses, expected {expected}")
            }
            UnitViolation::MissingWitness { simplex } => {
                write!(f, "no witness for simplex `{simplex}`")
            }
            UnitViolation::FaceMismatch { witness, face_index, expected, actual } => write!(
                f,
                "face F_{face_index} of {witness}: expected target `{expected}`, got `{actual}`"
            ),
            UnitViolation::NegativeSurvivor { dim, target } => {
                write!(f, "negative-sign candidate survived in dimension {dim}: -{target}")
            }
            UnitViolation::Issue(s) => write!(f, "{s}"),
        }
    }
}

/// Checks the reconstruction theorem on one complex: the unit `u_X`
/// (σ ↦ witness with target σ) is a face-respecting bijection between the
/// 2-skeleton of X and `hom(★, N(X))`.  Empty report = identity on
/// 2-skeleta.
pub fn unit_comparison(x: &DeltaComplex) -> Result<ValidationReport<UnitViolation>, Error> {
    let c = normalized_chains(x);
    let s = canonical_structure(x);
    let r = reconstruct_2_skeleton(&c, &s)?;
    let mut report = ValidationReport::new();
    for issue in &r.issues {
        report.push(UnitViolation::Issue(issue.to_string()));
    }
    let sk = skeleton(x, 2.min(x.dim()));
    for n in 0..=2usize.min(x.dim()) {
        let expected = sk.size(n);
        let actual = r.witnesses[n].witnesses.len();
        if expected != actual {
            report.push(UnitViolation::CountMismatch { dim: n, expected, actual });
        }
        for w in &r.witnesses[n].witnesses {
            if w.sign != 1 {
                report.push(UnitViolation::NegativeSurvivor { dim: n, target: w.target.clone() });
            }
        }
        for id in sk.ids(n) {
            match r.find_witness(n, id) {
                None => report.push(UnitViolation::MissingWitness { simplex: id.clone() }),
                Some(w) if n > 0 => {
                    for i in 0..=n {
                        let expected_face = x.id(x.face(x.lookup(id).unwrap(), i)).to_string();
                        let actual_face = w.face_target(i).unwrap_or_else(|| "?".into());
                        if expected_face != actual_face {
                            report.push(UnitViolation::FaceMismatch {
                                witness: w.label(),
                                face_index: i,
                                expected: expected_face,
                                actual: actual_face,
                            });
                        }
                    }
                }
                Some(_) => {}
            }
        }
    }
    Ok(report)
}

/// Pushes a verified Steenrod morphism through the reconstruction: each
/// witness goes to the witness targeting the image of its target, which by
/// the simplex-image corollary must be a single +1 generator.
pub fn induced_map(
    g: &ChainMap,
    r_src: &ReconstructedComplex,
    r_tgt: &ReconstructedComplex,
) -> Result<DeltaMap, Error> {
    let (src, tgt) = match (&r_src.complex, &r_tgt.complex) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::InvalidMap(
                "induced_map needs fully reconstructed complexes on both sides".into(),
            ))
        }
    };
    let mut pairs = Vec::new();
    for n in 0..=2usize {
        for w in &r_src.witnesses[n].witnesses {
            let image = g
                .image_of(&w.target)
                .ok_or_else(|| Error::UnknownGenerator { id: w.target.clone(), degree: n })?;
            let tau = match image.single_generator() {
                Some((t, 1)) => t.clone(),
                _ => {
                    return Err(Error::NonSimplexImage {
                        generator: w.target.clone(),
                        image: image.to_string(),
                    })
                }
            };
            let target_witness = r_tgt
                .find_witness(n, &tau)
                .ok_or_else(|| Error::MissingWitness { target: tau.clone(), dim: n })?;
            pairs.push((w.label(), target_witness.label()));
        }
    }
    DeltaMap::from_pairs(src, tgt, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::chains_of_map;
    use crate::fixtures;

    fn setup(x: &DeltaComplex) -> (ChainComplex<String>, SteenrodStructure) {
        (normalized_chains(x), canonical_structure(x))
    }

    #[test]
    fn triangle_has_one_2_witness() {
        let d2 = standard_simplex(2);
        let (c, s) = setup(&d2);
        let e = enumerate_simplices(&c, &s, 2).unwrap();
        assert_eq!(e.witnesses.len(), 1);
        let w = &e.witnesses[0];
        assert_eq!((w.target.as_str(), w.sign), ("012", 1));
        assert_eq!(w.face_target(0).as_deref(), Some("12"));
        assert_eq!(w.face_target(1).as_deref(), Some("02"));
        assert_eq!(w.face_target(2).as_deref(), Some("01"));
        // the negative candidate dies at the chain-map stage
        assert!(e
            .rejected
            .iter()
            .any(|r| r.sign == -1 && r.reason == RejectReason::ChainMap));
    }

    #[test]
    fn circle_edge_witness_is_unique_and_loop_reversal_rejected_at_i1() {
        let (c, s) = setup(&fixtures::circle());
        let e = enumerate_simplices(&c, &s, 1).unwrap();
        assert_eq!(e.witnesses.len(), 1);
        let w = &e.witnesses[0];
        assert_eq!(w.target, "e");
        assert_eq!(w.vertex_image(0).as_deref(), Some("v"));
        assert_eq!(w.vertex_image(1).as_deref(), Some("v"));
        let neg = e.rejected.iter().find(|r| r.sign == -1).unwrap();
        assert_eq!(neg.reason, RejectReason::Morphism { i: 1 });
    }

    #[test]
    fn negative_vertex_candidates_die_at_i0() {
        let (c, s) = setup(&fixtures::point());
        let e = enumerate_simplices(&c, &s, 0).unwrap();
        assert_eq!(e.witnesses.len(), 1);
        assert_eq!(e.rejected.len(), 1);
        assert_eq!(e.rejected[0].reason, RejectReason::Morphism { i: 0 });
    }

    #[test]
    fn reconstruct_torus_and_sphere() {
        let t = fixtures::torus();
        let (c, s) = setup(&t);
        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        assert!(r.issues.is_empty());
        assert_eq!(r.witness_counts(), vec![1, 3, 2]);
        let rc = r.complex.as_ref().unwrap();
        assert!(rc.validate().is_valid());

        let d3 = standard_simplex(3);
        let (c, s) = setup(&d3);
        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        assert_eq!(r.witness_counts(), vec![4, 6, 4]);

        let (c, s) = setup(&fixtures::point());
        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        assert_eq!(r.witness_counts(), vec![1, 0, 0]);
    }

    #[test]
    fn unit_comparison_identity_on_fixtures() {
        for x in [fixtures::klein_bottle(), fixtures::point(), fixtures::two_edge_circle()] {
            let report = unit_comparison(&x).unwrap();
            assert!(report.is_valid(), "{}: {report}", x.name());
        }
    }

    #[test]
    fn induced_map_of_identity_is_identity() {
        let t = fixtures::torus();
        let (c, s) = setup(&t);
        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        let g = ChainMap::identity(&c);
        let f = induced_map(&g, &r, &r).unwrap();
        assert!(f.validate().is_valid());
        assert!(f.is_isomorphism());
        for (a, b) in f.pairs() {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn induced_map_of_relabeling_is_isomorphism() {
        let t = fixtures::torus();
        let (y, rel) = crate::random::random_relabeling(3, &t);
        let g = chains_of_map(&rel).unwrap();
        let (ct, st) = setup(&t);
        let (cy, sy) = setup(&y);
        let cert = verify_morphism(&g, &st, &sy, 3).unwrap();
        assert!(cert.is_morphism());
        let r_src = reconstruct_2_skeleton(&ct, &st).unwrap();
        let r_tgt = reconstruct_2_skeleton(&cy, &sy).unwrap();
        let f = induced_map(&g, &r_src, &r_tgt).unwrap();
        assert!(f.validate().is_valid());
        assert!(f.is_isomorphism());
        // the induced map is the original delta-map read through witness labels
        for (a, b) in f.pairs() {
            let from = a.trim_start_matches("w(").trim_end_matches(')');
            let to = b.trim_start_matches("w(").trim_end_matches(')');
            assert_eq!(rel.apply_id(from), Some(to));
        }
    }

    #[test]
    fn non_canonical_coalgebra_reports_face_lookup_issues() {
        use crate::chain::TensorGenerator;
        use crate::steenrod::{verify_structure, SteenrodStructure};
        // a coherent but non-canonical structure on the circle's chains:
        // ξ₀(v) = -v⊗v flips the vertex witness's sign, so the surviving
        // edge witness has no +1 vertex witness to attach its faces to
        let c = normalized_chains(&fixtures::circle());
        let mut s = SteenrodStructure::zero(c.clone());
        let tg = |l: &str, ld: usize, r: &str, rd: usize| TensorGenerator::new(l, ld, r, rd);
        s.set_component(0, "v", Chain::from_terms(0, [(tg("v", 0, "v", 0), -1)])).unwrap();
        s.set_component(
            0,
            "e",
            Chain::from_terms(1, [(tg("v", 0, "e", 1), -1), (tg("e", 1, "v", 0), -1)]),
        )
        .unwrap();
        s.set_component(1, "e", Chain::from_terms(2, [(tg("e", 1, "e", 1), 1)])).unwrap();
        assert!(verify_structure(&s, 2).is_valid(), "structure must be coherent");

        let e0 = enumerate_simplices(&c, &s, 0).unwrap();
        assert_eq!(e0.witnesses.len(), 1);
        assert_eq!(e0.witnesses[0].sign, -1, "vertex witness survives negatively");
        let e1 = enumerate_simplices(&c, &s, 1).unwrap();
        assert_eq!(e1.witnesses.len(), 1);

        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        assert!(!r.issues.is_empty(), "face lookups must fail");
        assert!(r.complex.is_none());
        assert!(r
            .issues
            .iter()
            .all(|i| matches!(i, ReconstructIssue::FaceLookup { .. })));
    }

    #[test]
    fn non_simplex_image_is_an_error() {
        let c0 = fixtures::circle();
        let (c, _s) = setup(&c0);
        let images = vec![
            vec![Chain::generator(0, "v".to_string())],
            vec![Chain::generator(1, "e".to_string()).scaled(-1)],
        ];
        let g = ChainMap::new(c.clone(), c.clone(), images).unwrap();
        let s = canonical_structure(&c0);
        let r = reconstruct_2_skeleton(&c, &s).unwrap();
        let err = induced_map(&g, &r, &r).unwrap_err();
        assert!(matches!(err, Error::NonSimplexImage { .. }));
    }
}
