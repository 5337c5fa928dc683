//! Regenerates the JSON fixture files under `fixtures/` from the built-in
//! constructors.  Run from the workspace root:
//!
//!     cargo run -p steenrod-chains --example gen_fixtures

use std::fs;
use std::path::Path;

use steenrod_chains::io::complex_to_json;
use steenrod_chains::{fixtures, standard_simplex};

fn main() -> std::io::Result<()> {
    let dir = Path::new("fixtures");
    fs::create_dir_all(dir)?;
    let complexes = vec![
        fixtures::point(),
        fixtures::circle(),
        fixtures::two_edge_circle(),
        fixtures::chain_circle(),
        fixtures::disjoint_edges(),
        fixtures::torus(),
        fixtures::klein_bottle(),
        fixtures::projective_plane(),
        fixtures::boundary_delta3(),
        standard_simplex(1),
        standard_simplex(2),
        standard_simplex(3),
    ];
    for x in &complexes {
        let path = dir.join(format!("{}.json", x.name()));
        fs::write(&path, complex_to_json(x))?;
        println!("wrote {}", path.display());
    }

    // relabeled torus copy (a -> b -> c -> a) plus the relabeling delta-map
    let t = fixtures::torus();
    let spec = steenrod_chains::ComplexSpec::new(
        "torus_relabeled",
        vec![
            steenrod_chains::SimplexSpec::vertex("v"),
            steenrod_chains::SimplexSpec::new("b", 1, &["v", "v"]),
            steenrod_chains::SimplexSpec::new("c", 1, &["v", "v"]),
            steenrod_chains::SimplexSpec::new("a", 1, &["v", "v"]),
            steenrod_chains::SimplexSpec::new("L", 2, &["c", "a", "b"]),
            steenrod_chains::SimplexSpec::new("U", 2, &["b", "a", "c"]),
        ],
    );
    let t2 = spec.build().expect("relabeled torus is valid");
    fs::write(dir.join("torus_relabeled.json"), complex_to_json(&t2))?;
    let map = steenrod_chains::DeltaMap::from_pairs(
        &t,
        &t2,
        &[
            ("v".into(), "v".into()),
            ("a".into(), "b".into()),
            ("b".into(), "c".into()),
            ("c".into(), "a".into()),
            ("L".into(), "L".into()),
            ("U".into(), "U".into()),
        ],
    )
    .expect("relabel map resolves");
    assert!(map.validate().is_valid());
    fs::write(dir.join("torus_relabel.map.json"), steenrod_chains::io::delta_map_to_json(&map))?;
    println!("wrote fixtures/torus_relabeled.json and fixtures/torus_relabel.map.json");

    // the loop-reversal chain map e -> -e on the circle
    let flip = r#"{
  "source": "circle",
  "target": "circle",
  "maps": {
    "0": [ { "from": "v", "to": [["v", 1]] } ],
    "1": [ { "from": "e", "to": [["e", -1]] } ]
  }
}"#;
    fs::write(dir.join("flip_circle.chainmap.json"), flip)?;

    // swapped-endpoint negation b -> -a on two disjoint edges
    let swap = r#"{
  "source": "disjoint_edges",
  "target": "disjoint_edges",
  "maps": {
    "0": [
      { "from": "u0", "to": [["u0", 1]] },
      { "from": "u1", "to": [["u1", 1]] },
      { "from": "w0", "to": [["u1", 1]] },
      { "from": "w1", "to": [["u0", 1]] }
    ],
    "1": [
      { "from": "a", "to": [["a", 1]] },
      { "from": "b", "to": [["a", -1]] }
    ]
  }
}"#;
    fs::write(dir.join("swap_edges.chainmap.json"), swap)?;

    // identity delta-map on the torus, in the delta-map file format
    let ident = steenrod_chains::DeltaMap::identity(&t);
    fs::write(dir.join("torus_identity.map.json"), steenrod_chains::io::delta_map_to_json(&ident))?;
    println!("wrote chain-map and delta-map fixtures");
    Ok(())
}
