//! The bar-resolution model of Z over the group ring of Z/2, the canonical
//! Steenrod diagonal (higher cup-i coproducts extending Alexander-Whitney),
//! and verifiers for structure coherence and coalgebra morphisms.
//!
//! Conventions, fixed once for the whole crate:
//!   ∂σ = Σ_i (-1)^i F_i σ
//!   ∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b
//!   T(a⊗b) = (-1)^{|a||b|} b⊗a
//!   d(e_i) = (-1)^i e_{i-1} + T e_{i-1},  d(e_0) = 0
//!   ∂(ξ(e_i⊗σ)) = ξ(d e_i ⊗ σ) + (-1)^i ξ(e_i ⊗ ∂σ)
//!
//! The universal component ξ(e_i ⊗ Δ^n) is built by the acyclic-models
//! recursion with the front-vertex cone contraction of N(Δ^n); its support
//! is exactly the interval-cut terms, one per (i+1)-subset of cut points,
//! with coefficients ±1.  Values depend only on vertex indices, which makes
//! the structure natural under delta-maps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::chain::{
    apply_tensor_map, normalized_chains, tensor_boundary, Chain, ChainComplex, ChainMap,
    TensorChain, TensorGenerator,
};
use crate::complex::DeltaComplex;
use crate::error::Error;
use crate::report::ValidationReport;

/// A generator of the bar resolution RS_2: the untwisted `e_i` or its
/// translate `T·e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarGenerator {
    pub degree: usize,
    pub twisted: bool,
}

impl BarGenerator {
    pub fn untwisted(degree: usize) -> Self {
        BarGenerator { degree, twisted: false }
    }

    pub fn twisted(degree: usize) -> Self {
        BarGenerator { degree, twisted: true }
    }
}

impl fmt::Display for BarGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "T·e{}", self.degree)
        } else {
            write!(f, "e{}", self.degree)
        }
    }
}

/// `d(e_i) = (-1)^i e_{i-1} + T e_{i-1}` for i >= 1; `d(e_0) = 0`.
pub fn bar_differential(i: usize) -> Vec<(BarGenerator, i64)> {
    if i == 0 {
        return Vec::new();
    }
    let sign = if i % 2 == 0 { 1 } else { -1 };
    vec![
        (BarGenerator::untwisted(i - 1), sign),
        (BarGenerator::twisted(i - 1), 1),
    ]
}

/// The Koszul swap `T(a⊗b) = (-1)^{|a||b|} b⊗a`, extended linearly.
pub fn koszul_swap(c: &TensorChain) -> TensorChain {
    let mut out = Chain::zero(c.degree());
    for (g, k) in c.terms() {
        let sign = if (g.left_degree * g.right_degree) % 2 == 0 { 1 } else { -1 };
        out.add_term(
            TensorGenerator::new(g.right.clone(), g.right_degree, g.left.clone(), g.left_degree),
            k * sign,
        );
    }
    out
}

// ------------------------------------------------------------------
// universal values on standard simplices, in bitmask form
// ------------------------------------------------------------------

type Mask = u32;
type MaskChain = BTreeMap<(Mask, Mask), i64>;

fn mask_degree(m: Mask) -> usize {
    m.count_ones() as usize - 1
}

fn add_term(ch: &mut MaskChain, key: (Mask, Mask), c: i64) {
    if c == 0 {
        return;
    }
    let e = ch.entry(key).or_insert(0);
    *e += c;
    if *e == 0 {
        ch.remove(&key);
    }
}

fn add_scaled(dst: &mut MaskChain, src: &MaskChain, scale: i64) {
    for (&k, &c) in src {
        add_term(dst, k, c * scale);
    }
}

/// ∂ of a single simplex mask: delete set bits with alternating signs.
fn mask_boundary(m: Mask) -> Vec<(Mask, i64)> {
    if m.count_ones() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut sign = 1i64;
    for v in 0..32 {
        if m & (1 << v) != 0 {
            out.push((m & !(1 << v), sign));
            sign = -sign;
        }
    }
    out
}

fn mask_tensor_boundary(ch: &MaskChain) -> MaskChain {
    let mut out = MaskChain::new();
    for (&(a, b), &c) in ch {
        for (fa, s) in mask_boundary(a) {
            add_term(&mut out, (fa, b), c * s);
        }
        let koszul = if mask_degree(a) % 2 == 0 { 1 } else { -1 };
        for (fb, s) in mask_boundary(b) {
            add_term(&mut out, (a, fb), c * s * koszul);
        }
    }
    out
}

fn mask_swap(ch: &MaskChain) -> MaskChain {
    let mut out = MaskChain::new();
    for (&(a, b), &c) in ch {
        let sign = if (mask_degree(a) * mask_degree(b)) % 2 == 0 { 1 } else { -1 };
        add_term(&mut out, (b, a), c * sign);
    }
    out
}

/// Relabel vertices along the coface `δ_j : [n-1] -> [n]`.
fn mask_push_coface(ch: &MaskChain, j: usize) -> MaskChain {
    let push = |m: Mask| -> Mask {
        let low = m & ((1 << j) - 1);
        let high = (m >> j) << (j + 1);
        low | high
    };
    let mut out = MaskChain::new();
    for (&(a, b), &c) in ch {
        add_term(&mut out, (push(a), push(b)), c);
    }
    out
}

/// Cone at vertex 0: `h(S) = {0} ∪ S` when 0 ∉ S, else 0.
fn mask_cone(m: Mask) -> Option<Mask> {
    (m & 1 == 0).then_some(m | 1)
}

/// Contracting homotopy of the tensor square: `H = h⊗1 + (ηε)⊗h`.
fn mask_homotopy(ch: &MaskChain) -> MaskChain {
    let mut out = MaskChain::new();
    for (&(a, b), &c) in ch {
        if let Some(ca) = mask_cone(a) {
            add_term(&mut out, (ca, b), c);
        }
        if mask_degree(a) == 0 {
            if let Some(cb) = mask_cone(b) {
                add_term(&mut out, (1, cb), c);
            }
        }
    }
    out
}

fn alexander_whitney(n: usize) -> MaskChain {
    let mut out = MaskChain::new();
    for p in 0..=n {
        let front: Mask = (1 << (p + 1)) - 1;
        let back: Mask = (((1u64 << (n + 1)) - 1) as Mask) & !((1 << p) - 1);
        add_term(&mut out, (front, back), 1);
    }
    out
}

/// Memoized universal components ξ(e_i ⊗ Δ^n).
#[derive(Default)]
struct UniversalTable {
    memo: HashMap<(usize, usize), MaskChain>,
}

impl UniversalTable {
    fn value(&mut self, n: usize, i: usize) -> MaskChain {
        if i > n {
            return MaskChain::new();
        }
        if let Some(v) = self.memo.get(&(n, i)) {
            return v.clone();
        }
        let v = if i == 0 {
            alexander_whitney(n)
        } else {
            let prev = self.value(n, i - 1);
            let sign_i = if i % 2 == 0 { 1 } else { -1 };
            let mut rhs = MaskChain::new();
            add_scaled(&mut rhs, &prev, sign_i);
            add_scaled(&mut rhs, &mask_swap(&prev), 1);
            if i + 1 <= n {
                let lower = self.value(n - 1, i);
                let mut face_sign = 1i64;
                for j in 0..=n {
                    add_scaled(&mut rhs, &mask_push_coface(&lower, j), sign_i * face_sign);
                    face_sign = -face_sign;
                }
            }
            let sol = mask_homotopy(&rhs);
            assert_eq!(
                mask_tensor_boundary(&sol),
                rhs,
                "homotopy failed to solve the coherence equation at (n={n}, i={i})"
            );
            sol
        };
        self.memo.insert((n, i), v.clone());
        v
    }
}

fn mask_positions(m: Mask) -> Vec<usize> {
    (0..32).filter(|v| m & (1 << v) != 0).collect()
}

// ------------------------------------------------------------------
// the structure itself
// ------------------------------------------------------------------

/// A Steenrod coalgebra structure on a chain complex: one tensor-valued
/// component per untwisted `e_i` and carrier generator; twisted values are
/// the Koszul swaps (equivariance is a contract, not data).
#[derive(Debug, Clone)]
pub struct SteenrodStructure {
    carrier: ChainComplex<String>,
    /// `components[d][idx][i]` = ξ(e_i ⊗ g) for the idx-th degree-d
    /// generator, stored for `i <= d` (higher components vanish).
    components: Vec<Vec<Vec<TensorChain>>>,
}

impl SteenrodStructure {
    /// A structure with all components zero except ξ(e_0⊗v) unset too —
    /// building block for hand-made structures in tests and experiments.
    pub fn zero(carrier: ChainComplex<String>) -> Self {
        let components = (0..=carrier.max_degree())
            .map(|d| {
                (0..carrier.rank(d))
                    .map(|_| (0..=d).map(|i| Chain::zero(d + i)).collect())
                    .collect()
            })
            .collect();
        SteenrodStructure { carrier, components }
    }

    pub fn carrier(&self) -> &ChainComplex<String> {
        &self.carrier
    }

    /// The stored component ξ(e_i ⊗ g); zero beyond the vanishing range.
    pub fn component(&self, i: usize, g: &str) -> Result<TensorChain, Error> {
        let (d, idx) = self
            .carrier
            .position(&g.to_string())
            .ok_or_else(|| Error::UnknownGenerator { id: g.to_string(), degree: 0 })?;
        if i > d {
            return Ok(Chain::zero(d + i));
        }
        Ok(self.components[d][idx][i].clone())
    }

    /// Overrides one component (degree checks deferred to `verify`).
    pub fn set_component(&mut self, i: usize, g: &str, value: TensorChain) -> Result<(), Error> {
        let (d, idx) = self
            .carrier
            .position(&g.to_string())
            .ok_or_else(|| Error::UnknownGenerator { id: g.to_string(), degree: 0 })?;
        if i > d {
            return Err(Error::DegreeMismatch { expected: d, actual: i });
        }
        self.components[d][idx][i] = value;
        Ok(())
    }

    /// Linear evaluation of ξ(e_i ⊗ c) (twisted: evaluation at `T·e_i`,
    /// i.e. the Koszul swap of the untwisted value).
    pub fn evaluate(&self, i: usize, twisted: bool, c: &Chain<String>) -> Result<TensorChain, Error> {
        let mut out = Chain::zero(c.degree() + i);
        for (g, k) in c.terms() {
            match self.carrier.position(g) {
                Some((d, _)) if d == c.degree() => {}
                _ => {
                    return Err(Error::UnknownGenerator { id: g.clone(), degree: c.degree() })
                }
            }
            out.add(&self.component(i, g)?, k);
        }
        Ok(if twisted { koszul_swap(&out) } else { out })
    }
}

/// The canonical Steenrod structure on `N(X)`: ξ(e_0⊗σ) is the
/// Alexander-Whitney coproduct and the higher components are the cup-i
/// coproducts, pushed from the universal values on standard simplices
/// through iterated faces of σ.
pub fn canonical_structure(x: &DeltaComplex) -> SteenrodStructure {
    let carrier = normalized_chains(x);
    let mut table = UniversalTable::default();
    let mut components = Vec::new();
    for d in 0..=x.dim() {
        let mut per_gen = Vec::new();
        for idx in 0..x.size(d) {
            let mut per_i = Vec::new();
            for i in 0..=d {
                let universal = table.value(d, i);
                let mut value = Chain::zero(d + i);
                for (&(ma, mb), &c) in &universal {
                    let pa = mask_positions(ma);
                    let pb = mask_positions(mb);
                    let ra = x.sub_simplex((d, idx), &pa);
                    let rb = x.sub_simplex((d, idx), &pb);
                    value.add_term(
                        TensorGenerator::new(
                            x.id(ra).to_string(),
                            pa.len() - 1,
                            x.id(rb).to_string(),
                            pb.len() - 1,
                        ),
                        c,
                    );
                }
                per_i.push(value);
            }
            per_gen.push(per_i);
        }
        components.push(per_gen);
    }
    SteenrodStructure { carrier, components }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    /// A stored term has factor degrees that disagree with the carrier or a
    /// total degree other than |σ| + i.
    Degree { generator: String, i: usize, term: String },
    /// ξ(e_i⊗σ) != 0 with i beyond the vanishing range.
    Vanishing { generator: String, i: usize },
    /// ∂(ξ(e_i⊗σ)) != ξ(d e_i ⊗ σ) + (-1)^i ξ(e_i ⊗ ∂σ).
    ChainMap { generator: String, i: usize, lhs: TensorChain, rhs: TensorChain },
    /// Twisted evaluation differs from the Koszul swap of the untwisted one.
    Equivariance { generator: String, i: usize },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::Degree { generator, i, term } => {
                write!(f, "degree violation at (e{i}, `{generator}`): term {term}")
            }
            StructureViolation::Vanishing { generator, i } => {
                write!(f, "ξ(e{i}⊗`{generator}`) should vanish (i exceeds degree)")
            }
            StructureViolation::ChainMap { generator, i, lhs, rhs } => write!(
                f,
                "chain-map identity fails at (e{i}, `{generator}`): ∂ξ = {lhs} but ξ∂ = {rhs}"
            ),
            StructureViolation::Equivariance { generator, i } => {
                write!(f, "equivariance fails at (e{i}, `{generator}`)")
            }
        }
    }
}

/// Checks degree correctness, the vanishing range, the chain-map identity
/// and the equivariance contract for every generator and every `i <= i_max`.
pub fn verify_structure(s: &SteenrodStructure, i_max: usize) -> ValidationReport<StructureViolation> {
    let mut report = ValidationReport::new();
    let carrier = s.carrier();
    for d in 0..=carrier.max_degree() {
        for g in carrier.basis(d) {
            let sigma = Chain::generator(d, g.clone());
            for i in 0..=i_max {
                let value = s.component(i, g).expect("generator in carrier");
                if i > d && !value.is_zero() {
                    report.push(StructureViolation::Vanishing { generator: g.clone(), i });
                    continue;
                }
                let mut degree_ok = true;
                for (t, _) in value.terms() {
                    let left_ok = carrier.degree_of(&t.left) == Some(t.left_degree);
                    let right_ok = carrier.degree_of(&t.right) == Some(t.right_degree);
                    if !left_ok || !right_ok || t.degree() != d + i {
                        report.push(StructureViolation::Degree {
                            generator: g.clone(),
                            i,
                            term: t.to_string(),
                        });
                        degree_ok = false;
                    }
                }
                if !degree_ok {
                    continue;
                }
                // ∂(ξ(e_i⊗σ)) = ξ(d e_i ⊗ σ) + (-1)^i ξ(e_i ⊗ ∂σ)
                let lhs = tensor_boundary(carrier, &value);
                let mut rhs = Chain::zero(d + i - if d + i > 0 { 1 } else { 0 });
                if d + i > 0 {
                    for (b, c) in bar_differential(i) {
                        let v = s.evaluate(b.degree, b.twisted, &sigma).unwrap();
                        rhs.add(&v, c);
                    }
                    if d > 0 {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        let v = s.evaluate(i, false, carrier.boundary_of(g).unwrap()).unwrap();
                        rhs.add(&v, sign);
                    }
                }
                if lhs != rhs {
                    report.push(StructureViolation::ChainMap { generator: g.clone(), i, lhs, rhs });
                }
                let twisted = s.evaluate(i, true, &sigma).unwrap();
                if twisted != koszul_swap(&s.evaluate(i, false, &sigma).unwrap()) {
                    report.push(StructureViolation::Equivariance { generator: g.clone(), i });
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismViolation {
    pub generator: String,
    pub degree: usize,
    pub i: usize,
    /// `(f⊗f)(ξ_src(e_i⊗σ))`
    pub lhs: TensorChain,
    /// `ξ_tgt(e_i⊗fσ)`
    pub rhs: TensorChain,
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a Steenrod morphism at (e{}, `{}`, degree {}): (f⊗f)ξ = {} but ξf = {}",
            self.i, self.generator, self.degree, self.lhs, self.rhs
        )
    }
}

/// Outcome of checking the morphism square over all generators and i-indices.
#[derive(Debug, Clone)]
pub struct MorphismCertificate {
    pub i_max: usize,
    pub degrees_checked: usize,
    pub violations: Vec<MorphismViolation>,
}

impl MorphismCertificate {
    pub fn is_morphism(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for MorphismCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_morphism() {
            write!(
                f,
                "Steenrod morphism verified (degrees <= {}, i <= {})",
                self.degrees_checked, self.i_max
            )
        } else {
            for (k, v) in self.violations.iter().enumerate() {
                if k > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Compares `(f⊗f)∘ξ_src` with `ξ_tgt∘f` on every source generator for all
/// `i <= i_max`.  Checking untwisted generators suffices: both sides are
/// equivariant, so the twisted conditions are the Koszul swaps of these.
pub fn verify_morphism(
    f: &ChainMap,
    s_src: &SteenrodStructure,
    s_tgt: &SteenrodStructure,
    i_max: usize,
) -> Result<MorphismCertificate, Error> {
    if f.source() != s_src.carrier() {
        return Err(Error::CarrierMismatch(format!(
            "map source `{}` is not the source structure's carrier `{}`",
            f.source().name(),
            s_src.carrier().name()
        )));
    }
    if f.target() != s_tgt.carrier() {
        return Err(Error::CarrierMismatch(format!(
            "map target `{}` is not the target structure's carrier `{}`",
            f.target().name(),
            s_tgt.carrier().name()
        )));
    }
    let mut violations = Vec::new();
    let degrees_checked = f.source().max_degree();
    for d in 0..=degrees_checked {
        for g in f.source().basis(d) {
            let sigma = Chain::generator(d, g.clone());
            for i in 0..=i_max {
                let lhs = apply_tensor_map(f, &s_src.evaluate(i, false, &sigma)?)?;
                let rhs = s_tgt.evaluate(i, false, &f.apply(&sigma)?)?;
                if lhs != rhs {
                    violations.push(MorphismViolation {
                        generator: g.clone(),
                        degree: d,
                        i,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(MorphismCertificate { i_max, degrees_checked, violations })
}

/// Interval-cut support of ξ(e_i ⊗ Δ^n): one term per strictly increasing
/// choice of i+1 cut points in {0..n}; odd blocks feed the right factor.
/// Used by the tests as an independent combinatorial oracle for the support
/// of the universal values.
pub fn interval_cut_support(n: usize, i: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn choose(pool: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, pool: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..pool {
                cur.push(v);
                rec(v + 1, pool, k, cur, out);
                cur.pop();
            }
        }
        rec(0, pool, k, &mut cur, &mut out);
        out
    }
    let mut out = Vec::new();
    for cuts in choose(n + 1, i + 1) {
        let mut bounds = vec![0];
        bounds.extend(&cuts);
        bounds.push(n);
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut ok = true;
        for k in 1..bounds.len() {
            let (lo, hi) = (bounds[k - 1], bounds[k]);
            if hi < lo {
                ok = false;
                break;
            }
            let dst = if (k - 1) % 2 == 0 { &mut left } else { &mut right };
            for v in lo..=hi {
                if dst.last() != Some(&v) {
                    dst.push(v);
                }
            }
        }
        if !ok {
            continue;
        }
        let distinct = |vs: &[usize]| vs.windows(2).all(|w| w[0] < w[1]);
        if distinct(&left) && distinct(&right) {
            out.push((left, right));
        }
    }
    out.sort();
    out.dedup();
    out
}
