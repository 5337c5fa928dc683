//! Free integer chain complexes on simplex bases, chain maps, and tensor
//! squares with Koszul signs.  Boundary convention: `∂σ = Σ_i (-1)^i F_i σ`;
//! on tensors `∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use crate::complex::{DeltaComplex, DeltaMap};
use crate::error::Error;
use crate::report::ValidationReport;
use crate::simplicial::SimplicialSet;

pub trait BasisElem: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug {}
impl<T: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug> BasisElem for T {}

/// A sparse integer combination of generators of a fixed degree.  Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain<G: BasisElem> {
    degree: usize,
    terms: BTreeMap<G, i64>,
}

impl<G: BasisElem> Chain<G> {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn generator(degree: usize, g: G) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, 1);
        Chain { degree, terms }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (G, i64)>) -> Self {
        let mut c = Chain::zero(degree);
        for (g, k) in terms {
            c.add_term(g, k);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn add_term(&mut self, g: G, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Chain<G>, scale: i64) {
        debug_assert_eq!(self.degree, other.degree);
        for (g, c) in other.terms() {
            self.add_term(g.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: i64) -> Chain<G> {
        let mut out = Chain::zero(self.degree);
        out.add(self, scale);
        out
    }

    /// True when the chain is `±g` for a single generator; returns it.
    pub fn single_generator(&self) -> Option<(&G, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (g, &c) = self.terms.iter().next().unwrap();
        (c == 1 || c == -1).then_some((g, c))
    }
}

impl<G: BasisElem> fmt::Display for Chain<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A free graded integer chain complex with per-degree ordered bases and
/// `∂∘∂ = 0` checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex<G: BasisElem> {
    name: String,
    basis: Vec<Vec<G>>,
    boundaries: Vec<Vec<Chain<G>>>,
    index: HashMap<G, (usize, usize)>,
}

impl<G: BasisElem> ChainComplex<G> {
    /// `boundaries[d][i]` is `∂` of `basis[d][i]` and must be a degree-`d-1`
    /// chain supported on `basis[d-1]`; degree-0 boundaries are zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<Vec<G>>,
        boundaries: Vec<Vec<Chain<G>>>,
    ) -> Result<Self, Error> {
        let name = name.into();
        let mut index = HashMap::new();
        for (d, gens) in basis.iter().enumerate() {
            for (i, g) in gens.iter().enumerate() {
                if index.insert(g.clone(), (d, i)).is_some() {
                    return Err(Error::ComplexMismatch(format!(
                        "duplicate generator `{g}` in `{name}`"
                    )));
                }
            }
        }
        if boundaries.len() != basis.len()
            || boundaries.iter().zip(&basis).any(|(bs, gs)| bs.len() != gs.len())
        {
            return Err(Error::ComplexMismatch(format!(
                "boundary table shape does not match basis in `{name}`"
            )));
        }
        let c = ChainComplex { name, basis, boundaries, index };
        for d in 0..c.basis.len() {
            for (i, g) in c.basis[d].iter().enumerate() {
                let b = &c.boundaries[d][i];
                if d == 0 {
                    if !b.is_zero() {
                        return Err(Error::ComplexMismatch(format!(
                            "vertex `{g}` has nonzero boundary"
                        )));
                    }
                    continue;
                }
                if b.degree() + 1 != d {
                    return Err(Error::DegreeMismatch { expected: d - 1, actual: b.degree() });
                }
                for (h, _) in b.terms() {
                    match c.index.get(h) {
                        Some(&(dh, _)) if dh + 1 == d => {}
                        _ => {
                            return Err(Error::UnknownGenerator {
                                id: h.to_string(),
                                degree: d - 1,
                            })
                        }
                    }
                }
                let bb = c.boundary(b);
                if !bb.is_zero() {
                    return Err(Error::ComplexMismatch(format!(
                        "∂∂ != 0 on `{g}`: ∂∂ = {bb}"
                    )));
                }
            }
        }
        Ok(c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_degree(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn basis(&self, d: usize) -> &[G] {
        self.basis.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn degree_of(&self, g: &G) -> Option<usize> {
        self.index.get(g).map(|&(d, _)| d)
    }

    pub fn position(&self, g: &G) -> Option<(usize, usize)> {
        self.index.get(g).copied()
    }

    pub fn boundary_of(&self, g: &G) -> Option<&Chain<G>> {
        let &(d, i) = self.index.get(g)?;
        Some(&self.boundaries[d][i])
    }

    /// Linear extension of the boundary to chains.
    pub fn boundary(&self, c: &Chain<G>) -> Chain<G> {
        let mut out = Chain::zero(c.degree().saturating_sub(1));
        for (g, k) in c.terms() {
            if let Some(b) = self.boundary_of(g) {
                out.add(b, k);
            }
        }
        out
    }

    pub fn contains(&self, c: &Chain<G>) -> bool {
        c.terms().all(|(g, _)| self.index.get(g).is_some_and(|&(d, _)| d == c.degree()))
    }

    /// The boundary matrix `∂_d : C_d -> C_{d-1}` (rows indexed by the
    /// degree-`d-1` basis, columns by the degree-`d` basis).
    pub fn boundary_matrix(&self, d: usize) -> Vec<Vec<i128>> {
        if d == 0 || d > self.max_degree() {
            return Vec::new();
        }
        let rows = self.rank(d - 1);
        let cols = self.rank(d);
        let mut m = vec![vec![0i128; cols]; rows];
        for (j, _g) in self.basis[d].iter().enumerate() {
            for (h, c) in self.boundaries[d][j].terms() {
                let (_, i) = self.index[h];
                m[i][j] = c as i128;
            }
        }
        m
    }
}

/// Normalized chains `N(X)` of a delta-complex: one generator per simplex,
/// `∂σ = Σ_i (-1)^i F_i σ`.
pub fn normalized_chains(x: &DeltaComplex) -> ChainComplex<String> {
    let mut basis = Vec::new();
    let mut boundaries = Vec::new();
    for d in 0..=x.dim() {
        let gens: Vec<String> = x.ids(d).to_vec();
        let mut bs = Vec::new();
        for i in 0..x.size(d) {
            let mut b = Chain::zero(d.saturating_sub(1));
            if d > 0 {
                for k in 0..=d {
                    let f = x.face((d, i), k);
                    b.add_term(x.id(f).to_string(), if k % 2 == 0 { 1 } else { -1 });
                }
            }
            bs.push(b);
        }
        basis.push(gens);
        boundaries.push(bs);
    }
    ChainComplex::new(format!("N({})", x.name()), basis, boundaries)
        .expect("valid complex yields a chain complex")
}

/// Unnormalized chains of a simplicial set: by definition the normalized
/// chains of its forgetful delta-complex, generator for generator.
pub fn unnormalized_chains(s: &SimplicialSet, max_dim: usize) -> ChainComplex<String> {
    normalized_chains(&s.forget(max_dim))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMapViolation<G: BasisElem> {
    pub generator: G,
    pub lhs: Chain<G>,
    pub rhs: Chain<G>,
}

impl<G: BasisElem> fmt::Display for ChainMapViolation<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "∂f != f∂ on `{}`: ∂f = {} but f∂ = {}",
            self.generator, self.lhs, self.rhs
        )
    }
}

/// A degree-0 linear map between chain complexes on `String` bases, given by
/// images of source generators.
#[derive(Debug, Clone)]
pub struct ChainMap {
    source: ChainComplex<String>,
    target: ChainComplex<String>,
    images: Vec<Vec<Chain<String>>>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex<String>,
        target: ChainComplex<String>,
        images: Vec<Vec<Chain<String>>>,
    ) -> Result<Self, Error> {
        if images.len() != source.basis.len()
            || images.iter().zip(&source.basis).any(|(im, gs)| im.len() != gs.len())
        {
            return Err(Error::InvalidChainMap(
                "image table shape does not match the source basis".into(),
            ));
        }
        for (d, ims) in images.iter().enumerate() {
            for c in ims {
                if c.degree() != d {
                    return Err(Error::DegreeMismatch { expected: d, actual: c.degree() });
                }
                if !target.contains(c) {
                    return Err(Error::InvalidChainMap(format!(
                        "image {c} is not supported on the target degree-{d} basis"
                    )));
                }
            }
        }
        Ok(ChainMap { source, target, images })
    }

    pub fn identity(c: &ChainComplex<String>) -> ChainMap {
        let images = c
            .basis
            .iter()
            .enumerate()
            .map(|(d, gens)| gens.iter().map(|g| Chain::generator(d, g.clone())).collect())
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), images }
    }

    pub fn source(&self) -> &ChainComplex<String> {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex<String> {
        &self.target
    }

    pub fn image_of(&self, g: &str) -> Option<&Chain<String>> {
        let (d, i) = self.source.position(&g.to_string())?;
        Some(&self.images[d][i])
    }

    pub fn apply(&self, c: &Chain<String>) -> Result<Chain<String>, Error> {
        let mut out = Chain::zero(c.degree());
        for (g, k) in c.terms() {
            let im = self.image_of(g).ok_or_else(|| Error::UnknownGenerator {
                id: g.clone(),
                degree: c.degree(),
            })?;
            out.add(im, k);
        }
        Ok(out)
    }

    pub fn compose(&self, inner: &ChainMap) -> Result<ChainMap, Error> {
        if inner.target != self.source {
            return Err(Error::ComplexMismatch(format!(
                "`{}` does not feed `{}`",
                inner.target.name(),
                self.source.name()
            )));
        }
        let images = inner
            .images
            .iter()
            .map(|ims| ims.iter().map(|c| self.apply(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ChainMap::new(inner.source.clone(), self.target.clone(), images)
    }

    /// Exponent matrix in a fixed degree (rows = target basis, columns =
    /// source basis).
    pub fn matrix(&self, d: usize) -> Vec<Vec<i64>> {
        let rows = self.target.rank(d);
        let cols = self.source.rank(d);
        let mut m = vec![vec![0i64; cols]; rows];
        for (j, _) in self.source.basis(d).iter().enumerate() {
            for (h, c) in self.images[d][j].terms() {
                let (_, i) = self.target.position(h).unwrap();
                m[i][j] = c;
            }
        }
        m
    }
}

/// Lists every generator where `∂∘f != f∘∂`.
pub fn verify_chain_map(f: &ChainMap) -> ValidationReport<ChainMapViolation<String>> {
    let mut report = ValidationReport::new();
    for d in 0..=f.source.max_degree() {
        for g in f.source.basis(d) {
            let img = f.image_of(g).unwrap();
            let lhs = f.target.boundary(img);
            let rhs = f.apply(f.source.boundary_of(g).unwrap()).unwrap();
            if lhs != rhs {
                report.push(ChainMapViolation { generator: g.clone(), lhs, rhs });
            }
        }
    }
    report
}

/// The chain map induced by a valid delta-map: `σ ↦ f(σ)`.
pub fn chains_of_map(f: &DeltaMap) -> Result<ChainMap, Error> {
    let report = f.validate();
    if !report.is_valid() {
        return Err(Error::InvalidMap(report.to_string()));
    }
    let source = normalized_chains(f.source());
    let target = normalized_chains(f.target());
    let mut images = Vec::new();
    for d in 0..=f.source().dim() {
        let mut ims = Vec::new();
        for i in 0..f.source().size(d) {
            let img = f.apply((d, i)).expect("map is total");
            ims.push(Chain::generator(d, f.target().id(img).to_string()));
        }
        images.push(ims);
    }
    ChainMap::new(source, target, images)
}

/// A basis element `a⊗b` of a tensor square.  Ordering and equality use the
/// labels only (degrees are determined by them within one complex); the
/// ordering is lexicographic, which fixes the rendering order.
#[derive(Debug, Clone)]
pub struct TensorGenerator {
    pub left: String,
    pub right: String,
    pub left_degree: usize,
    pub right_degree: usize,
}

impl TensorGenerator {
    pub fn new(left: impl Into<String>, left_degree: usize, right: impl Into<String>, right_degree: usize) -> Self {
        TensorGenerator { left: left.into(), right: right.into(), left_degree, right_degree }
    }

    pub fn degree(&self) -> usize {
        self.left_degree + self.right_degree
    }
}

impl PartialEq for TensorGenerator {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left && self.right == other.right
    }
}
impl Eq for TensorGenerator {}

impl PartialOrd for TensorGenerator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for TensorGenerator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.left, &self.right).cmp(&(&other.left, &other.right))
    }
}
impl Hash for TensorGenerator {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.left.hash(state);
        self.right.hash(state);
    }
}

impl fmt::Display for TensorGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.left, self.right)
    }
}

pub type TensorChain = Chain<TensorGenerator>;

/// `∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b`, coefficients read from `carrier`.
pub fn tensor_boundary(carrier: &ChainComplex<String>, c: &TensorChain) -> TensorChain {
    let mut out = Chain::zero(c.degree().saturating_sub(1));
    for (g, k) in c.terms() {
        if g.left_degree > 0 {
            let da = carrier.boundary_of(&g.left).expect("left factor in carrier");
            for (h, ch) in da.terms() {
                out.add_term(
                    TensorGenerator::new(h.clone(), g.left_degree - 1, g.right.clone(), g.right_degree),
                    k * ch,
                );
            }
        }
        if g.right_degree > 0 {
            let db = carrier.boundary_of(&g.right).expect("right factor in carrier");
            let sign = if g.left_degree % 2 == 0 { 1 } else { -1 };
            for (h, ch) in db.terms() {
                out.add_term(
                    TensorGenerator::new(g.left.clone(), g.left_degree, h.clone(), g.right_degree - 1),
                    k * ch * sign,
                );
            }
        }
    }
    out
}

/// The degree-truncated tensor square `C⊗C` as an explicit chain complex.
pub fn tensor_square(c: &ChainComplex<String>, max_degree: usize) -> ChainComplex<TensorGenerator> {
    let mut basis = Vec::new();
    let mut boundaries = Vec::new();
    for k in 0..=max_degree {
        let mut gens = Vec::new();
        for la in 0..=k.min(c.max_degree()) {
            let lb = k - la;
            if lb > c.max_degree() {
                continue;
            }
            for a in c.basis(la) {
                for b in c.basis(lb) {
                    gens.push(TensorGenerator::new(a.clone(), la, b.clone(), lb));
                }
            }
        }
        gens.sort();
        let bs: Vec<TensorChain> = gens
            .iter()
            .map(|g| {
                if k == 0 {
                    Chain::zero(0)
                } else {
                    tensor_boundary(c, &Chain::generator(k, g.clone()))
                }
            })
            .collect();
        basis.push(gens);
        boundaries.push(bs);
    }
    ChainComplex::new(format!("{}⊗{}", c.name(), c.name()), basis, boundaries)
        .expect("tensor square is a chain complex")
}

/// `(f⊗f)` applied to a tensor chain (no Koszul signs: `f` has degree 0).
pub fn apply_tensor_map(f: &ChainMap, c: &TensorChain) -> Result<TensorChain, Error> {
    let mut out = Chain::zero(c.degree());
    for (g, k) in c.terms() {
        let fa = f.image_of(&g.left).ok_or_else(|| Error::UnknownGenerator {
            id: g.left.clone(),
            degree: g.left_degree,
        })?;
        let fb = f.image_of(&g.right).ok_or_else(|| Error::UnknownGenerator {
            id: g.right.clone(),
            degree: g.right_degree,
        })?;
        for (a, ca) in fa.terms() {
            for (b, cb) in fb.terms() {
                out.add_term(
                    TensorGenerator::new(a.clone(), g.left_degree, b.clone(), g.right_degree),
                    k * ca * cb,
                );
            }
        }
    }
    Ok(out)
}
