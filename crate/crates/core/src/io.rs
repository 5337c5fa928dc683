//! JSON file formats: complexes, delta-maps and chain maps.
//!
//! Complex:   { "name": …, "simplices": [ { "id", "dim", "faces": [F_0…] } ] }
//! Delta map: { "source": …, "target": …, "assignment": [ {"from","to"} ] }
//! Chain map: { "source": …, "target": …,
//!              "maps": { "(degree)": [ {"from", "to": [[id, coeff]…]} ] } }

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, ChainComplex, ChainMap};
use crate::complex::{ComplexSpec, DeltaComplex, DeltaMap, SimplexSpec};
use crate::error::Error;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub name: String,
    pub simplices: Vec<SimplexEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplexEntry {
    pub id: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<String>,
}

impl From<ComplexFile> for ComplexSpec {
    fn from(f: ComplexFile) -> Self {
        ComplexSpec {
            name: f.name,
            simplices: f
                .simplices
                .into_iter()
                .map(|s| SimplexSpec { id: s.id, dim: s.dim, faces: s.faces })
                .collect(),
        }
    }
}

impl From<&ComplexSpec> for ComplexFile {
    fn from(spec: &ComplexSpec) -> Self {
        ComplexFile {
            name: spec.name.clone(),
            simplices: spec
                .simplices
                .iter()
                .map(|s| SimplexEntry { id: s.id.clone(), dim: s.dim, faces: s.faces.clone() })
                .collect(),
        }
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexSpec, Error> {
    let file: ComplexFile = serde_json::from_str(text)?;
    Ok(file.into())
}

pub fn complex_to_json(x: &DeltaComplex) -> String {
    let file = ComplexFile::from(&x.to_spec());
    serde_json::to_string_pretty(&file).expect("complex serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub source: String,
    pub target: String,
    pub assignment: Vec<MapEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapEntry {
    pub from: String,
    pub to: String,
}

pub fn parse_map(text: &str) -> Result<MapFile, Error> {
    Ok(serde_json::from_str(text)?)
}

pub fn build_delta_map(
    file: &MapFile,
    source: &DeltaComplex,
    target: &DeltaComplex,
) -> Result<DeltaMap, Error> {
    if file.source != source.name() || file.target != target.name() {
        return Err(Error::InvalidMap(format!(
            "map file is `{}` -> `{}` but the loaded complexes are `{}` -> `{}`",
            file.source,
            file.target,
            source.name(),
            target.name()
        )));
    }
    let pairs: Vec<(String, String)> =
        file.assignment.iter().map(|e| (e.from.clone(), e.to.clone())).collect();
    DeltaMap::from_pairs(source, target, &pairs)
}

pub fn delta_map_to_json(f: &DeltaMap) -> String {
    let file = MapFile {
        source: f.source().name().to_string(),
        target: f.target().name().to_string(),
        assignment: f
            .pairs()
            .into_iter()
            .map(|(from, to)| MapEntry { from, to })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("map serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainMapFile {
    pub source: String,
    pub target: String,
    /// keyed by degree rendered as a decimal string
    pub maps: BTreeMap<String, Vec<ChainImageEntry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainImageEntry {
    pub from: String,
    pub to: Vec<(String, i64)>,
}

pub fn parse_chain_map(text: &str) -> Result<ChainMapFile, Error> {
    Ok(serde_json::from_str(text)?)
}

/// Assembles a [`ChainMap`]; every source generator must receive an image.
/// Source/target names in the file refer to the underlying complexes.
pub fn build_chain_map(
    file: &ChainMapFile,
    source: &ChainComplex<String>,
    target: &ChainComplex<String>,
) -> Result<ChainMap, Error> {
    let matches = |declared: &str, name: &str| {
        name == declared || name == format!("N({declared})")
    };
    if !matches(&file.source, source.name()) || !matches(&file.target, target.name()) {
        return Err(Error::InvalidChainMap(format!(
            "chain-map file is `{}` -> `{}` but the complexes are `{}` -> `{}`",
            file.source,
            file.target,
            source.name(),
            target.name()
        )));
    }
    let mut table: BTreeMap<String, Chain<String>> = BTreeMap::new();
    for (deg, entries) in &file.maps {
        let d: usize = deg
            .parse()
            .map_err(|_| Error::InvalidChainMap(format!("bad degree key `{deg}`")))?;
        for e in entries {
            let chain = Chain::from_terms(d, e.to.iter().map(|(g, c)| (g.clone(), *c)));
            if table.insert(e.from.clone(), chain).is_some() {
                return Err(Error::InvalidChainMap(format!("`{}` assigned twice", e.from)));
            }
        }
    }
    let mut images = Vec::new();
    for d in 0..=source.max_degree() {
        let mut level = Vec::new();
        for g in source.basis(d) {
            let img = table
                .remove(g)
                .ok_or_else(|| Error::InvalidChainMap(format!("generator `{g}` has no image")))?;
            if img.degree() != d {
                return Err(Error::DegreeMismatch { expected: d, actual: img.degree() });
            }
            level.push(img);
        }
        images.push(level);
    }
    if let Some((g, _)) = table.into_iter().next() {
        return Err(Error::InvalidChainMap(format!("`{g}` is not a source generator")));
    }
    ChainMap::new(source.clone(), target.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{normalized_chains, verify_chain_map};
    use crate::fixtures;

    #[test]
    fn complex_round_trip() {
        let t = fixtures::torus();
        let json = complex_to_json(&t);
        let spec = parse_complex(&json).unwrap();
        let back = spec.build().unwrap();
        assert!(back.same_structure(&t));
        assert_eq!(back.name(), "torus");
    }

    #[test]
    fn vertices_omit_faces() {
        let json = complex_to_json(&fixtures::point());
        assert!(!json.contains("faces"));
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(parse_complex("{ not json").is_err());
        assert!(parse_complex("{\"name\": 3}").is_err());
    }

    #[test]
    fn chain_map_file_round_trip() {
        let c = normalized_chains(&fixtures::circle());
        let text = r#"{
            "source": "circle", "target": "circle",
            "maps": {
                "0": [ {"from": "v", "to": [["v", 1]]} ],
                "1": [ {"from": "e", "to": [["e", -1]]} ]
            }
        }"#;
        let file = parse_chain_map(text).unwrap();
        let f = build_chain_map(&file, &c, &c).unwrap();
        assert!(verify_chain_map(&f).is_valid());
        assert_eq!(f.image_of("e").unwrap().coeff(&"e".to_string()), -1);
    }

    #[test]
    fn chain_map_file_requires_total_assignment() {
        let c = normalized_chains(&fixtures::circle());
        let text = r#"{ "source": "circle", "target": "circle",
                        "maps": { "0": [ {"from": "v", "to": [["v", 1]]} ] } }"#;
        let file = parse_chain_map(text).unwrap();
        assert!(build_chain_map(&file, &c, &c).is_err());
    }

    #[test]
    fn delta_map_file_round_trip() {
        let c = fixtures::two_edge_circle();
        let f = DeltaMap::from_pairs(
            &c,
            &c,
            &[
                ("u".into(), "u".into()),
                ("v".into(), "v".into()),
                ("a".into(), "b".into()),
                ("b".into(), "a".into()),
            ],
        )
        .unwrap();
        let json = delta_map_to_json(&f);
        let file = parse_map(&json).unwrap();
        let g = build_delta_map(&file, &c, &c).unwrap();
        assert!(g.validate().is_valid());
        assert_eq!(g.apply_id("a"), Some("b"));
    }
}
