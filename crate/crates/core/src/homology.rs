//! Integral homology of a finite chain complex via Smith normal form.

use std::fmt;

use crate::chain::{BasisElem, ChainComplex};
use crate::snf::smith_normal_form;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Torsion coefficients `t_1 | t_2 | ...`, each >= 2.
    pub torsion: Vec<i128>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
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

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub groups: Vec<HomologyGroup>,
}

impl HomologySummary {
    pub fn betti(&self, d: usize) -> usize {
        self.groups.get(d).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, d: usize) -> &[i128] {
        self.groups.get(d).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, g) in self.groups.iter().enumerate() {
            if d > 0 {
                writeln!(f)?;
            }
            write!(f, "H_{d} = {g}")?;
        }
        Ok(())
    }
}

/// Betti ranks and torsion per degree: `H_d = Z^{n_d - r_d - r_{d+1}} ⊕
/// coker-torsion of ∂_{d+1}`, all exactly over the integers.
pub fn homology<G: BasisElem>(c: &ChainComplex<G>) -> HomologySummary {
    let top = c.max_degree();
    let snfs: Vec<_> = (0..=top + 1).map(|d| smith_normal_form(c.boundary_matrix(d))).collect();
    let mut groups = Vec::new();
    for d in 0..=top {
        let rank_d = snfs[d].rank();
        let rank_d1 = snfs[d + 1].rank();
        groups.push(HomologyGroup {
            betti: c.rank(d) - rank_d - rank_d1,
            torsion: snfs[d + 1].torsion(),
        });
    }
    HomologySummary { groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::normalized_chains;
    use crate::complex::standard_simplex;
    use crate::fixtures;

    #[test]
    fn contractible_simplex() {
        let h = homology(&normalized_chains(&standard_simplex(2)));
        assert_eq!(h.betti_numbers(), vec![1, 0, 0]);
        assert!(h.groups.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn circle() {
        let h = homology(&normalized_chains(&fixtures::circle()));
        assert_eq!(h.betti_numbers(), vec![1, 1]);
    }

    #[test]
    fn torus() {
        let h = homology(&normalized_chains(&fixtures::torus()));
        assert_eq!(h.betti_numbers(), vec![1, 2, 1]);
        assert!(h.torsion(1).is_empty());
    }

    #[test]
    fn klein_bottle() {
        let h = homology(&normalized_chains(&fixtures::klein_bottle()));
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 1);
        assert_eq!(h.torsion(1), &[2]);
        assert_eq!(h.betti(2), 0);
    }

    #[test]
    fn projective_plane() {
        let h = homology(&normalized_chains(&fixtures::projective_plane()));
        assert_eq!(h.betti_numbers(), vec![1, 0, 0]);
        assert_eq!(h.torsion(1), &[2]);
        assert_eq!(format!("{}", h.groups[1]), "Z/2");
    }

    #[test]
    fn sphere() {
        let h = homology(&normalized_chains(&fixtures::boundary_delta3()));
        assert_eq!(h.betti_numbers(), vec![1, 0, 1]);
    }
}
