//! Deterministic random generation of valid delta-complexes and delta-maps,
//! used by the property suites.  The generator works dimension by dimension,
//! searching for face tuples that satisfy the simplicial identities, so the
//! output genuinely contains loops and identified faces.

use crate::complex::{simplex_inclusion, ComplexSpec, DeltaComplex, DeltaMap, SimplexSpec};

/// SplitMix64: tiny, deterministic, platform-independent.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

/// Searches for an `(n+1)`-tuple of `(n-1)`-simplices `c_0..c_n` satisfying
/// `F_i(c_j) = F_{j-1}(c_i)` for all `i < j`, starting from a random offset.
fn find_face_tuple(
    x: &ComplexInProgress,
    n: usize,
    rng: &mut SplitMix64,
) -> Option<Vec<usize>> {
    let pool = x.level(n - 1).len();
    if pool == 0 {
        return None;
    }
    let offsets: Vec<usize> = (0..=n).map(|_| rng.below(pool)).collect();
    let mut tuple = vec![0usize; n + 1];

    fn consistent(x: &ComplexInProgress, n: usize, tuple: &[usize], j: usize) -> bool {
        for i in 0..j {
            if x.face(n - 1, tuple[j], i) != x.face(n - 1, tuple[i], j - 1) {
                return false;
            }
        }
        true
    }

    fn search(
        x: &ComplexInProgress,
        n: usize,
        pool: usize,
        offsets: &[usize],
        tuple: &mut Vec<usize>,
        j: usize,
        budget: &mut usize,
    ) -> bool {
        if j == n + 1 {
            return true;
        }
        for k in 0..pool {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            tuple[j] = (k + offsets[j]) % pool;
            if consistent(x, n, tuple, j)
                && search(x, n, pool, offsets, tuple, j + 1, budget)
            {
                return true;
            }
        }
        false
    }

    let mut budget = 20_000usize;
    search(x, n, pool, &offsets, &mut tuple, 0, &mut budget).then_some(tuple)
}

struct ComplexInProgress {
    // level[d][i] = faces (indices into level d-1); vertices hold empty vecs
    levels: Vec<Vec<Vec<usize>>>,
}

impl ComplexInProgress {
    fn level(&self, d: usize) -> &Vec<Vec<usize>> {
        &self.levels[d]
    }

    fn face(&self, d: usize, i: usize, k: usize) -> usize {
        self.levels[d][i][k]
    }
}

/// A random valid delta-complex with at most `max_simplices` simplices and
/// dimension at most `max_dim`.  Deterministic in the seed.
pub fn random_delta_complex(seed: u64, max_dim: usize, max_simplices: usize) -> DeltaComplex {
    let mut rng = SplitMix64::new(seed);
    let n_vertices = 1 + rng.below(3);
    let mut x = ComplexInProgress { levels: vec![vec![Vec::new(); n_vertices]] };
    let mut total = n_vertices;

    if max_dim >= 1 {
        let n_edges = rng.below(5);
        let mut edges = Vec::new();
        for _ in 0..n_edges {
            if total >= max_simplices {
                break;
            }
            edges.push(vec![rng.below(n_vertices), rng.below(n_vertices)]);
            total += 1;
        }
        x.levels.push(edges);
    }

    for n in 2..=max_dim {
        if x.levels.len() < n || x.levels[n - 1].is_empty() {
            break;
        }
        let mut level = Vec::new();
        let attempts = 1 + rng.below(4);
        for _ in 0..attempts {
            if total >= max_simplices {
                break;
            }
            // allow the search to see simplices added this round
            let probe = ComplexInProgress {
                levels: {
                    let mut ls = x.levels.clone();
                    ls.push(level.clone());
                    ls
                },
            };
            if let Some(tuple) = find_face_tuple(&probe, n, &mut rng) {
                level.push(tuple);
                total += 1;
            }
        }
        if level.is_empty() {
            break;
        }
        x.levels.push(level);
    }

    let mut simplices = Vec::new();
    for (d, level) in x.levels.iter().enumerate() {
        for (i, faces) in level.iter().enumerate() {
            simplices.push(SimplexSpec {
                id: format!("s{d}_{i}"),
                dim: d,
                faces: faces.iter().map(|&k| format!("s{}_{k}", d - 1)).collect(),
            });
        }
    }
    let c = ComplexSpec::new(format!("random_{seed:x}"), simplices)
        .build()
        .expect("generator output satisfies the face identities");
    debug_assert!(c.validate().is_valid());
    c
}

/// A random delta-map with a random complex as target: the classifying map
/// `Δ^n -> X` of a random simplex, optionally precomposed with a coface.
pub fn random_delta_map(seed: u64, max_dim: usize, max_simplices: usize) -> DeltaMap {
    let mut rng = SplitMix64::new(seed ^ 0xabcd_ef01);
    let x = random_delta_complex(seed, max_dim, max_simplices);
    let all: Vec<_> = x.simplices().collect();
    let r = all[rng.below(all.len())];
    let incl = simplex_inclusion(&x, r);
    if r.0 >= 1 && rng.chance(1, 2) {
        let i = rng.below(r.0 + 1);
        incl.compose(&crate::complex::coface_map(r.0, i)).expect("composable")
    } else {
        incl
    }
}

/// A random relabeling isomorphism of `x` (permutes ids within each
/// dimension, rewires faces accordingly).
pub fn random_relabeling(seed: u64, x: &DeltaComplex) -> (DeltaComplex, DeltaMap) {
    let mut rng = SplitMix64::new(seed ^ 0x5151_5151);
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for d in 0..=x.dim() {
        let mut p: Vec<usize> = (0..x.size(d)).collect();
        for i in (1..p.len()).rev() {
            let j = rng.below(i + 1);
            p.swap(i, j);
        }
        perms.push(p);
    }
    let new_id = |d: usize, i: usize| format!("r{d}_{}", perms[d][i]);
    let mut simplices = Vec::new();
    for d in 0..=x.dim() {
        for i in 0..x.size(d) {
            let faces = if d == 0 {
                Vec::new()
            } else {
                (0..=d).map(|k| new_id(d - 1, x.face((d, i), k).1)).collect()
            };
            simplices.push(SimplexSpec { id: new_id(d, i), dim: d, faces });
        }
    }
    let y = ComplexSpec::new(format!("{}_relabeled", x.name()), simplices).build().unwrap();
    let pairs: Vec<(String, String)> = x
        .simplices()
        .map(|r| (x.id(r).to_string(), new_id(r.0, r.1)))
        .collect();
    let f = DeltaMap::from_pairs(x, &y, &pairs).unwrap();
    (y, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_complexes_are_valid() {
        for seed in 0..60 {
            let x = random_delta_complex(seed, 4, 30);
            assert!(x.validate().is_valid(), "seed {seed}");
            assert!(x.total_size() <= 30);
        }
    }

    #[test]
    fn random_complexes_reach_dimension_two_and_above() {
        let mut best = 0;
        for seed in 0..120 {
            best = best.max(random_delta_complex(seed, 4, 30).dim());
        }
        assert!(best >= 3, "generator too weak, best dim {best}");
    }

    #[test]
    fn random_maps_are_valid() {
        for seed in 0..40 {
            let f = random_delta_map(seed, 3, 20);
            assert!(f.validate().is_valid(), "seed {seed}");
        }
    }

    #[test]
    fn relabelings_are_isomorphisms() {
        let t = crate::fixtures::torus();
        for seed in 0..10 {
            let (_, f) = random_relabeling(seed, &t);
            assert!(f.validate().is_valid());
            assert!(f.is_isomorphism());
        }
    }

    #[test]
    fn random_generation_is_deterministic() {
        let a = random_delta_complex(7, 3, 20);
        let b = random_delta_complex(7, 3, 20);
        assert!(a.same_structure(&b));
    }
}
