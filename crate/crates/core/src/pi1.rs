//! Edge-path fundamental-group presentations of delta 2-skeleta: one
//! generator per edge, one relator per spanning-tree edge and per triangle
//! (`[0→1][1→2] = [0→2]`), abelianization through Smith normal form, and
//! induced homomorphisms along delta-maps.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::complex::{DeltaComplex, DeltaMap, SimplexRef};
use crate::error::Error;
use crate::snf::smith_normal_form;

/// A freely reduced word in named generators and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(String, i8)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(gen: impl Into<String>, exp: i8) -> Self {
        let mut w = Word::empty();
        w.push(gen.into(), exp);
        w
    }

    /// Appends one letter, cancelling against the tail.
    pub fn push(&mut self, gen: String, exp: i8) {
        debug_assert!(exp == 1 || exp == -1);
        match self.letters.last() {
            Some((g, e)) if *g == gen && *e == -exp => {
                self.letters.pop();
            }
            _ => self.letters.push((gen, exp)),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for (g, e) in &other.letters {
            out.push(g.clone(), *e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        let mut out = Word::empty();
        for (g, e) in self.letters.iter().rev() {
            out.push(g.clone(), -e);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[(String, i8)] {
        &self.letters
    }

    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters.iter().filter(|(g, _)| g == gen).map(|(_, e)| *e as i64).sum()
    }

    /// Rewrites each letter through `f`, reducing freely.
    pub fn map_letters(&self, mut f: impl FnMut(&str) -> Option<String>) -> Option<Word> {
        let mut out = Word::empty();
        for (g, e) in &self.letters {
            out.push(f(g)?, *e);
        }
        Some(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^-1")?;
            }
        }
        Ok(())
    }
}

/// `⟨ generators | relators ⟩` with the chosen basepoint and spanning tree
/// recorded; tree edges appear as length-1 relators.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub basepoint: String,
    pub tree: Vec<String>,
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨ {} | ", self.generators.join(", "))?;
        for (k, r) in self.relators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, " ⟩")
    }
}

/// BFS data over the 1-skeleton: discovery tree plus component membership.
struct Tree {
    /// vertex -> (tree edge, walked forward?); absent for the basepoint
    parent: HashMap<usize, (usize, bool)>,
    order: Vec<usize>,
    component_vertices: BTreeSet<usize>,
}

fn edge_ends(x: &DeltaComplex, e: usize) -> (usize, usize) {
    // tail = F_1, head = F_0, matching ∂e = head - tail
    (x.face((1, e), 1).1, x.face((1, e), 0).1)
}

fn bfs(x: &DeltaComplex, base: SimplexRef) -> Tree {
    // edges scanned in lexicographic id order for deterministic tie-breaks
    let mut edge_order: Vec<usize> = (0..x.size(1)).collect();
    edge_order.sort_by(|&a, &b| x.id((1, a)).cmp(x.id((1, b))));

    let mut parent = HashMap::new();
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(base.1);
    queue.push_back(base.1);
    while let Some(v) = queue.pop_front() {
        for &e in &edge_order {
            let (tail, head) = edge_ends(x, e);
            let (next, forward) = if tail == v {
                (head, true)
            } else if head == v {
                (tail, false)
            } else {
                continue;
            };
            if seen.insert(next) {
                parent.insert(next, (e, forward));
                order.push(e);
                queue.push_back(next);
            }
        }
    }
    Tree { parent, order, component_vertices: seen }
}

impl Tree {
    /// The tree word from the basepoint to `v`.
    fn path_to(&self, x: &DeltaComplex, v: usize) -> Word {
        let mut letters = Vec::new();
        let mut cur = v;
        while let Some(&(e, forward)) = self.parent.get(&cur) {
            letters.push((x.id((1, e)).to_string(), if forward { 1i8 } else { -1 }));
            let (tail, head) = edge_ends(x, e);
            cur = if forward { tail } else { head };
        }
        let mut w = Word::empty();
        for (g, e) in letters.into_iter().rev() {
            w.push(g, e);
        }
        w
    }
}

fn resolve_base(x: &DeltaComplex, base: &str) -> Result<SimplexRef, Error> {
    match x.lookup(base) {
        Some(r) if r.0 == 0 => Ok(r),
        _ => Err(Error::MissingBasepoint(base.to_string())),
    }
}

/// Deterministic BFS spanning tree of the basepoint's component, edges as
/// undirected arcs `F_1 σ -> F_0 σ`.
pub fn spanning_tree(x: &DeltaComplex, base: &str) -> Result<Vec<String>, Error> {
    let b = resolve_base(x, base)?;
    let t = bfs(x, b);
    Ok(t.order.iter().map(|&e| x.id((1, e)).to_string()).collect())
}

/// Edge-path presentation of π₁ of the basepoint's component: generators
/// are the component's edges; relators kill the tree edges and impose
/// `x_{F_2 σ} x_{F_0 σ} x_{F_1 σ}^{-1}` per triangle.
pub fn presentation(x: &DeltaComplex, base: &str) -> Result<GroupPresentation, Error> {
    let b = resolve_base(x, base)?;
    let t = bfs(x, b);
    let in_component =
        |e: usize| t.component_vertices.contains(&edge_ends(x, e).0);
    let generators: Vec<String> = (0..x.size(1))
        .filter(|&e| in_component(e))
        .map(|e| x.id((1, e)).to_string())
        .collect();
    let mut relators: Vec<Word> =
        t.order.iter().map(|&e| Word::letter(x.id((1, e)), 1)).collect();
    for s in 0..x.size(2) {
        let r = (2usize, s);
        let vertex_in = t.component_vertices.contains(&x.vertex(r, 0).1);
        if !vertex_in {
            continue;
        }
        let f0 = x.id(x.face(r, 0)).to_string();
        let f1 = x.id(x.face(r, 1)).to_string();
        let f2 = x.id(x.face(r, 2)).to_string();
        let mut w = Word::letter(f2, 1);
        w.push(f0, 1);
        w.push(f1, -1);
        relators.push(w);
    }
    Ok(GroupPresentation {
        generators,
        relators,
        basepoint: base.to_string(),
        tree: t.order.iter().map(|&e| x.id((1, e)).to_string()).collect(),
    })
}

/// Rank and torsion of the abelianized group, with the divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<i128>,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Smith normal form of the relator exponent-sum matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let cols = p.generators.len();
    let matrix: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| p.generators.iter().map(|g| r.exponent_sum(g) as i128).collect())
        .collect();
    let snf = smith_normal_form(matrix);
    AbelianInvariants { rank: cols - snf.rank(), torsion: snf.torsion() }
}

/// A π₁ homomorphism presented by generator images plus its abelianized
/// exponent matrix (rows = target generators, columns = source generators).
#[derive(Debug, Clone)]
pub struct InducedHomomorphism {
    pub images: Vec<(String, Word)>,
    pub matrix: Vec<Vec<i64>>,
}

impl InducedHomomorphism {
    pub fn image_of(&self, gen: &str) -> Option<&Word> {
        self.images.iter().find(|(g, _)| g == gen).map(|(_, w)| w)
    }
}

/// The homomorphism `π₁(ĝ)`: each source generator's edge loop
/// `T_tail · e · T_head^{-1}` maps through `ĝ` and is conjugated back to the
/// target basepoint along the tree path to `ĝ(basepoint)`.
pub fn induced_homomorphism(
    g: &DeltaMap,
    p_src: &GroupPresentation,
    p_tgt: &GroupPresentation,
) -> Result<InducedHomomorphism, Error> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::InvalidMap(report.to_string()));
    }
    let x = g.source();
    let y = g.target();
    let bx = resolve_base(x, &p_src.basepoint)?;
    let by = resolve_base(y, &p_tgt.basepoint)?;
    let tx = bfs(x, bx);
    let ty = bfs(y, by);
    let image_base = g.apply(bx).expect("map is total");
    if image_base.1 != by.1 && !ty.component_vertices.contains(&image_base.1) {
        return Err(Error::BasepointComponent(y.id(image_base).to_string()));
    }
    let p0 = ty.path_to(y, image_base.1);
    let mut images = Vec::new();
    for gen in &p_src.generators {
        let e = x.lookup(gen).expect("generator is an edge").1;
        let (tail, head) = edge_ends(x, e);
        let mut loop_word = tx.path_to(x, tail);
        loop_word.push(gen.clone(), 1);
        let back = tx.path_to(x, head).inverse();
        loop_word = loop_word.concat(&back);
        let mapped = loop_word
            .map_letters(|edge| g.apply_id(edge).map(str::to_string))
            .ok_or_else(|| Error::InvalidMap(format!("edge in loop of `{gen}` has no image")))?;
        let conjugated = p0.concat(&mapped).concat(&p0.inverse());
        images.push((gen.clone(), conjugated));
    }
    let matrix: Vec<Vec<i64>> = p_tgt
        .generators
        .iter()
        .map(|tg| images.iter().map(|(_, w)| w.exponent_sum(tg)).collect())
        .collect();
    Ok(InducedHomomorphism { images, matrix })
}
