//! Small classical delta-complexes used throughout the test suites and the
//! examples: circles, torus, Klein bottle, projective plane, and friends.

use crate::complex::{ComplexSpec, DeltaComplex, SimplexSpec};

/// One vertex, no edges.
pub fn point() -> DeltaComplex {
    ComplexSpec::new("point", vec![SimplexSpec::vertex("v")]).build().unwrap()
}

/// One vertex `v` and one loop edge `e`.
pub fn circle() -> DeltaComplex {
    ComplexSpec::new(
        "circle",
        vec![SimplexSpec::vertex("v"), SimplexSpec::new("e", 1, &["v", "v"])],
    )
    .build()
    .unwrap()
}

/// Two vertices and two parallel edges `a, b : u -> v` (`F_0 = head = v`).
/// This is the circle on which swapping the edges is an automorphism fixing
/// the vertices.
pub fn two_edge_circle() -> DeltaComplex {
    ComplexSpec::new(
        "circle2",
        vec![
            SimplexSpec::vertex("u"),
            SimplexSpec::vertex("v"),
            SimplexSpec::new("a", 1, &["v", "u"]),
            SimplexSpec::new("b", 1, &["v", "u"]),
        ],
    )
    .build()
    .unwrap()
}

/// Two vertices and two head-to-tail edges `a : u -> v`, `b : v -> u`.
/// The circle on which "both edges to the loop" is a degree-2 map.
pub fn chain_circle() -> DeltaComplex {
    ComplexSpec::new(
        "circle2_chain",
        vec![
            SimplexSpec::vertex("u"),
            SimplexSpec::vertex("v"),
            SimplexSpec::new("a", 1, &["v", "u"]),
            SimplexSpec::new("b", 1, &["u", "v"]),
        ],
    )
    .build()
    .unwrap()
}

/// Two disjoint edges `a : u0 -> u1` and `b : w0 -> w1`.
pub fn disjoint_edges() -> DeltaComplex {
    ComplexSpec::new(
        "disjoint_edges",
        vec![
            SimplexSpec::vertex("u0"),
            SimplexSpec::vertex("u1"),
            SimplexSpec::vertex("w0"),
            SimplexSpec::vertex("w1"),
            SimplexSpec::new("a", 1, &["u1", "u0"]),
            SimplexSpec::new("b", 1, &["w1", "w0"]),
        ],
    )
    .build()
    .unwrap()
}

/// Minimal delta-complex torus: one vertex, edges `a, b, c`, two triangles
/// glued along the diagonal `c`, giving the relations `c = ab` and `c = ba`.
pub fn torus() -> DeltaComplex {
    ComplexSpec::new(
        "torus",
        vec![
            SimplexSpec::vertex("v"),
            SimplexSpec::new("a", 1, &["v", "v"]),
            SimplexSpec::new("b", 1, &["v", "v"]),
            SimplexSpec::new("c", 1, &["v", "v"]),
            // [01] = F_2, [12] = F_0, [02] = F_1
            SimplexSpec::new("L", 2, &["b", "c", "a"]),
            SimplexSpec::new("U", 2, &["a", "c", "b"]),
        ],
    )
    .build()
    .unwrap()
}

/// Minimal delta-complex Klein bottle: relations `c = ab` and `c = ba^{-1}`.
pub fn klein_bottle() -> DeltaComplex {
    ComplexSpec::new(
        "klein",
        vec![
            SimplexSpec::vertex("v"),
            SimplexSpec::new("a", 1, &["v", "v"]),
            SimplexSpec::new("b", 1, &["v", "v"]),
            SimplexSpec::new("c", 1, &["v", "v"]),
            SimplexSpec::new("L", 2, &["b", "c", "a"]),
            SimplexSpec::new("U", 2, &["a", "b", "c"]),
        ],
    )
    .build()
    .unwrap()
}

/// Projective plane from the bigon `aa`: boundary vertex `v`, center `w`,
/// loop `a` at `v`, spokes `s, t : v -> w`, two triangles.
pub fn projective_plane() -> DeltaComplex {
    ComplexSpec::new(
        "rp2",
        vec![
            SimplexSpec::vertex("v"),
            SimplexSpec::vertex("w"),
            SimplexSpec::new("a", 1, &["v", "v"]),
            SimplexSpec::new("s", 1, &["w", "v"]),
            SimplexSpec::new("t", 1, &["w", "v"]),
            SimplexSpec::new("T1", 2, &["s", "t", "a"]),
            SimplexSpec::new("T2", 2, &["t", "s", "a"]),
        ],
    )
    .build()
    .unwrap()
}

/// Boundary of the 3-simplex (a 2-sphere).
pub fn boundary_delta3() -> DeltaComplex {
    crate::complex::skeleton(&crate::complex::standard_simplex(3), 2)
        .renamed("boundary_delta3")
}

/// Two disjoint one-loop circles.
pub fn two_circles() -> DeltaComplex {
    ComplexSpec::new(
        "two_circles",
        vec![
            SimplexSpec::vertex("v1"),
            SimplexSpec::vertex("v2"),
            SimplexSpec::new("e1", 1, &["v1", "v1"]),
            SimplexSpec::new("e2", 1, &["v2", "v2"]),
        ],
    )
    .build()
    .unwrap()
}

/// The reconstruction-theorem corpus: every fixture named by the acceptance
/// criteria, in a deterministic order.
pub fn corpus() -> Vec<DeltaComplex> {
    let mut out = vec![
        point(),
        circle(),
        two_edge_circle(),
        torus(),
        klein_bottle(),
        projective_plane(),
        boundary_delta3(),
    ];
    for n in 1..=4 {
        out.push(crate::complex::standard_simplex(n));
    }
    out
}
