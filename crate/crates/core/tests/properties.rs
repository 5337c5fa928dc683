//! Property suites over randomized delta-complexes and maps: face
//! identities, functor arithmetic, ∂² = 0, Steenrod coherence and
//! naturality, functoriality of chains, and homology cross-checks.

use steenrod_chains::random::{
    random_delta_complex, random_delta_map, random_relabeling, SplitMix64,
};
use steenrod_chains::{
    abelianization, adjunction_unit, canonical_structure, chains_of_map, coface_map,
    enumerate_simplices, free_inclusion, freely_degenerate, homology, normalized_chains,
    presentation, reconstruct_2_skeleton, simplex_inclusion, skeleton, standard_simplex,
    surjection_count, tensor_square, unit_comparison, unnormalized_chains, verify_chain_map,
    verify_morphism, verify_structure, DeltaMap,
};

fn corpus() -> Vec<steenrod_chains::DeltaComplex> {
    steenrod_chains::fixtures::corpus()
}

#[test]
fn face_identities_on_random_complexes() {
    for seed in 0..120 {
        let x = random_delta_complex(seed, 4, 30);
        assert!(x.validate().is_valid(), "seed {seed}");
    }
}

#[test]
fn boundary_squared_vanishes_everywhere() {
    for seed in 0..40 {
        let x = random_delta_complex(seed, 4, 30);
        let c = normalized_chains(&x);
        for d in 1..=c.max_degree() {
            for g in c.basis(d) {
                assert!(c.boundary(c.boundary_of(g).unwrap()).is_zero());
            }
        }
        let t = tensor_square(&c, c.max_degree() + 1);
        for d in 1..=t.max_degree() {
            for g in t.basis(d) {
                assert!(t.boundary(t.boundary_of(g).unwrap()).is_zero());
            }
        }
    }
}

#[test]
fn free_functor_counts_match_surjection_counting() {
    // independent oracle: Pascal-triangle binomials
    fn binomial(m: usize, n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..m {
            let mut next = vec![1u64];
            for k in 1..row.len() {
                next.push(row[k - 1] + row[k]);
            }
            next.push(1);
            row = next;
        }
        *row.get(n).unwrap_or(&0)
    }
    for seed in 0..20 {
        let x = random_delta_complex(seed, 3, 20);
        let s = freely_degenerate(&x, 4);
        for m in 0..=4usize {
            let expected: usize = (0..=m.min(x.dim()))
                .map(|n| binomial(m, n) as usize * x.size(n))
                .sum();
            assert_eq!(s.simplex_count(m), expected, "seed {seed}, dim {m}");
            assert_eq!(surjection_count(m, m.min(7)), binomial(m, m.min(7)));
        }
    }
}

#[test]
fn forget_contains_core_as_nondegenerate_part_and_inclusion_is_valid() {
    for seed in 0..15 {
        let x = random_delta_complex(seed, 3, 18);
        let m = x.dim() + 1;
        let iota = free_inclusion(&x, m);
        assert!(iota.validate().is_valid(), "seed {seed}");
        let s = freely_degenerate(&x, m);
        for d in 0..=x.dim() {
            let nondeg = s.simplices(d).iter().filter(|p| p.is_nondegenerate()).count();
            assert_eq!(nondeg, x.size(d));
        }
    }
}

#[test]
fn adjunction_unit_validates_and_restricts_to_identity() {
    let mut complexes = vec![
        steenrod_chains::fixtures::point(),
        steenrod_chains::fixtures::circle(),
        steenrod_chains::fixtures::torus(),
    ];
    for seed in 0..6 {
        complexes.push(random_delta_complex(seed, 2, 10));
    }
    for x in complexes {
        let m = x.dim() + 1;
        let s = freely_degenerate(&x, m);
        let g = adjunction_unit(&s, m);
        assert!(g.validate().is_valid(), "{}", x.name());
        assert!(g.is_surjective_up_to(m), "{}", x.name());
        // restriction to promoted nondegenerate pairs is the identity
        for d in 0..=m {
            for (i, p) in g.source().simplices(d).iter().enumerate() {
                if p.is_nondegenerate() {
                    assert_eq!(g.source().label(p), g.target().label(g.apply(d, i)));
                }
            }
        }
    }
}

#[test]
fn homology_of_unnormalized_matches_core_below_bound() {
    for x in corpus() {
        let m = x.dim() + 1;
        let s = freely_degenerate(&x, m);
        let hu = homology(&unnormalized_chains(&s, m));
        let hn = homology(&normalized_chains(&x));
        for d in 0..m {
            assert_eq!(hu.betti(d), hn.betti(d), "{} degree {d}", x.name());
            assert_eq!(hu.torsion(d), hn.torsion(d), "{} degree {d}", x.name());
        }
    }
}

#[test]
fn steenrod_coherence_on_random_complexes() {
    // the acceptance suite runs 200 seeds; keep the library property suite
    // lighter but identical in kind
    for seed in 0..60 {
        let x = random_delta_complex(seed, 4, 30);
        let s = canonical_structure(&x);
        let report = verify_structure(&s, 5);
        assert!(report.is_valid(), "seed {seed}: {report}");
    }
}

#[test]
fn steenrod_naturality_on_random_maps() {
    for seed in 0..25 {
        let f = random_delta_map(seed, 3, 18);
        let s_src = canonical_structure(f.source());
        let s_tgt = canonical_structure(f.target());
        let fc = chains_of_map(&f).unwrap();
        let cert = verify_morphism(&fc, &s_src, &s_tgt, 4).unwrap();
        assert!(cert.is_morphism(), "seed {seed}: {cert}");
    }
}

#[test]
fn chains_functoriality_on_composable_pairs() {
    for seed in 0..20 {
        let mut rng = SplitMix64::new(seed);
        let x = random_delta_complex(seed ^ 0x77, 3, 18);
        let all: Vec<_> = x.simplices().collect();
        let r = all[rng.below(all.len())];
        let g = simplex_inclusion(&x, r); // Δ^n -> X
        if r.0 == 0 {
            continue;
        }
        let f = coface_map(r.0, rng.below(r.0 + 1)); // Δ^{n-1} -> Δ^n
        let gf = g.compose(&f).unwrap();
        let lhs = chains_of_map(&gf).unwrap();
        let rhs = chains_of_map(&g).unwrap().compose(&chains_of_map(&f).unwrap()).unwrap();
        for d in 0..=gf.source().dim() {
            for gl in lhs.source().basis(d) {
                assert_eq!(lhs.image_of(gl), rhs.image_of(gl), "seed {seed} at `{gl}`");
            }
        }
    }
}

#[test]
fn witness_counts_and_reverification_agree_low_dims() {
    // brute force over all signed candidates for n in {0,1}: enumerate is
    // target-first, so cross-check that witness counts equal simplex counts
    // and every emitted witness re-verifies as a chain map and morphism
    for x in corpus() {
        let c = normalized_chains(&x);
        let s = canonical_structure(&x);
        for n in 0..=2usize.min(x.dim()) {
            let e = enumerate_simplices(&c, &s, n).unwrap();
            assert_eq!(e.witnesses.len(), x.size(n), "{} dim {n}", x.name());
            for w in &e.witnesses {
                assert_eq!(w.sign, 1, "{}: negative survivor", x.name());
                let f = w.to_chain_map(&c).unwrap();
                assert!(verify_chain_map(&f).is_valid());
                let cert = verify_morphism(
                    &f,
                    &canonical_structure(&standard_simplex(n)),
                    &s,
                    n,
                )
                .unwrap();
                assert!(cert.is_morphism());
            }
        }
    }
}

#[test]
fn reconstruction_matches_two_skeleton_on_corpus() {
    for x in corpus() {
        let report = unit_comparison(&x).unwrap();
        assert!(report.is_valid(), "{}: {report}", x.name());
        let r = reconstruct_2_skeleton(&normalized_chains(&x), &canonical_structure(&x)).unwrap();
        let sk = skeleton(&x, 2.min(x.dim()));
        let counts: Vec<usize> =
            (0..=2usize.min(x.dim())).map(|d| r.witnesses[d].witnesses.len()).collect();
        assert_eq!(counts, sk.simplex_counts(), "{}", x.name());
        assert!(r.complex.as_ref().unwrap().validate().is_valid());
    }
}

#[test]
fn induced_maps_respect_composition() {
    let t = steenrod_chains::fixtures::torus();
    let (y, f1) = random_relabeling(5, &t);
    let (z, f2) = random_relabeling(9, &y);
    let ct = normalized_chains(&t);
    let cy = normalized_chains(&y);
    let cz = normalized_chains(&z);
    let st = canonical_structure(&t);
    let sy = canonical_structure(&y);
    let sz = canonical_structure(&z);
    let rt = reconstruct_2_skeleton(&ct, &st).unwrap();
    let ry = reconstruct_2_skeleton(&cy, &sy).unwrap();
    let rz = reconstruct_2_skeleton(&cz, &sz).unwrap();

    let g1 = chains_of_map(&f1).unwrap();
    let g2 = chains_of_map(&f2).unwrap();
    let g21 = g2.compose(&g1).unwrap();

    let h1 = steenrod_chains::induced_map(&g1, &rt, &ry).unwrap();
    let h2 = steenrod_chains::induced_map(&g2, &ry, &rz).unwrap();
    let h21 = steenrod_chains::induced_map(&g21, &rt, &rz).unwrap();
    let composed = h2.compose(&h1).unwrap();
    assert_eq!(h21.pairs(), composed.pairs());
}

#[test]
fn abelianized_pi1_equals_degree_one_homology() {
    for x in corpus() {
        let base = x.ids(0)[0].clone();
        let inv = abelianization(&presentation(&x, &base).unwrap());
        let h = homology(&normalized_chains(&x));
        assert_eq!(inv.rank, h.betti(1), "{}", x.name());
        assert_eq!(inv.torsion.as_slice(), h.torsion(1), "{}", x.name());
    }
}

#[test]
fn induced_iso_abelianization_is_unimodular() {
    let t = steenrod_chains::fixtures::torus();
    for seed in [2, 4, 8] {
        let (y, f) = random_relabeling(seed, &t);
        let p_src = presentation(&t, "v").unwrap();
        let base_y = y.ids(0)[0].clone();
        let p_tgt = presentation(&y, &base_y).unwrap();
        let h = steenrod_chains::induced_homomorphism(&f, &p_src, &p_tgt).unwrap();
        // 3x3 permutation matrix: determinant ±1
        let m = &h.matrix;
        let det: i64 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        assert_eq!(det.abs(), 1, "seed {seed}");
    }
}

#[test]
fn skeleton_idempotence_and_identity() {
    for seed in 0..10 {
        let x = random_delta_complex(seed, 3, 20);
        assert!(skeleton(&x, x.dim()).same_structure(&x));
        let sk1 = skeleton(&x, 1);
        assert!(skeleton(&sk1, 1).same_structure(&sk1));
    }
}

#[test]
fn delta_map_of_identity_and_validation() {
    for seed in 0..10 {
        let x = random_delta_complex(seed, 3, 20);
        assert!(DeltaMap::identity(&x).validate().is_valid());
    }
}

#[test]
fn empty_complex_flows_through_the_pipeline() {
    let empty = steenrod_chains::ComplexSpec::new("empty", vec![]).build().unwrap();
    assert!(empty.validate().is_valid());
    assert_eq!(empty.dim(), 0);
    let c = normalized_chains(&empty);
    assert_eq!(c.rank(0), 0);
    let h = homology(&c);
    assert_eq!(h.betti(0), 0);
    let s = canonical_structure(&empty);
    assert!(verify_structure(&s, 2).is_valid());
    let r = reconstruct_2_skeleton(&c, &s).unwrap();
    assert_eq!(r.witness_counts(), vec![0, 0, 0]);
}
