//! Command-line front end: parse complexes and maps, run the pipeline,
//! emit deterministic reports.
//!
//! Exit codes: 0 success, 1 semantic failure (verification/violation),
//! 2 parse or reference error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use steenrod_chains::io;
use steenrod_chains::{
    abelianization, canonical_structure, chains_of_map, freely_degenerate,
    homology, induced_homomorphism, induced_map, normalized_chains, presentation,
    reconstruct_2_skeleton, verify_chain_map, verify_morphism, Chain, ChainMap, ComplexViolation,
    DeltaComplex, SteenrodStructure,
};

#[derive(Parser)]
#[command(name = "steenrod", version, about = "Chain-level Steenrod diagonals on delta-complexes: \
compute, verify, reconstruct 2-skeleta, and derive fundamental groups")]
struct Cli {
    /// Mirror the report as machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex file and report every face-identity violation or
    /// dangling reference
    Validate { file: PathBuf },

    /// Print the normalized chain complex; --homology adds betti/torsion
    Chain {
        file: PathBuf,
        #[arg(long)]
        homology: bool,
    },

    /// Print ξ(e_K ⊗ σ) as a signed tensor-term list
    Diagonal {
        file: PathBuf,
        /// simplex id
        #[arg(long)]
        simplex: String,
        /// bar-resolution index K
        #[arg(long)]
        i: usize,
    },

    /// Rebuild the 2-skeleton from the canonical Steenrod coalgebra alone
    Reconstruct {
        file: PathBuf,
        /// write the reconstructed complex as JSON to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Verify a (delta- or chain-) map file as a Steenrod morphism and emit
    /// the induced 2-skeleton map and its π₁ matrix
    Compare {
        src: PathBuf,
        tgt: PathBuf,
        mapfile: PathBuf,
        /// highest bar index checked (default: source dimension + 1)
        #[arg(long = "i-max")]
        i_max: Option<usize>,
    },

    /// Edge-path fundamental group presentation and abelian invariants
    Pi1 {
        file: PathBuf,
        /// basepoint vertex id (default: first vertex)
        #[arg(long)]
        base: Option<String>,
    },

    /// Convert a delta-complex through the free-degeneracy functors
    Convert {
        file: PathBuf,
        /// "simplicial" enumerates 𝔡(X); "delta" materializes 𝔣(𝔡(X))
        #[arg(long, value_parser = ["simplicial", "delta"])]
        to: String,
        #[arg(long = "max-dim")]
        max_dim: usize,
        /// write the resulting complex as JSON to this path (delta only)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// exit 2
    Parse(String),
    /// exit 1
    Semantic(String),
}

type CmdOutput = Result<(String, Value), Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Load and fully validate a complex file. Malformed syntax and duplicate
/// ids exit 2; face-identity violations and dangling references exit 1.
fn load_complex(path: &Path) -> Result<DeltaComplex, Failure> {
    let text = read_file(path)?;
    let spec = io::parse_complex(&text)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let report = spec.validate();
    let duplicates: Vec<String> = report
        .violations
        .iter()
        .filter(|v| matches!(v, ComplexViolation::DuplicateId { .. }))
        .map(|v| v.to_string())
        .collect();
    if !duplicates.is_empty() {
        return Err(Failure::Parse(format!("{}: {}", path.display(), duplicates.join("\n"))));
    }
    if !report.is_valid() {
        return Err(Failure::Semantic(format!("{}:\n{report}", path.display())));
    }
    spec.build().map_err(|e| Failure::Semantic(e.to_string()))
}

fn counts_line(x: &DeltaComplex) -> String {
    let counts: Vec<String> = x.simplex_counts().iter().map(usize::to_string).collect();
    format!("({})", counts.join(", "))
}

fn cmd_validate(file: &Path) -> CmdOutput {
    let x = load_complex(file)?;
    let text = format!("valid delta-complex `{}`: simplex counts {}", x.name(), counts_line(&x));
    let j = json!({ "name": x.name(), "counts": x.simplex_counts(), "valid": true });
    Ok((text, j))
}

fn cmd_chain(file: &Path, with_homology: bool) -> CmdOutput {
    let x = load_complex(file)?;
    let c = normalized_chains(&x);
    let mut lines = vec![format!("chain complex {}", c.name())];
    for d in 0..=c.max_degree() {
        lines.push(format!("  degree {d}: {}", c.basis(d).join(", ")));
    }
    let mut boundaries = serde_json::Map::new();
    for d in 1..=c.max_degree() {
        for g in c.basis(d) {
            let b = c.boundary_of(g).unwrap();
            lines.push(format!("  ∂({g}) = {b}"));
            boundaries.insert(g.clone(), Value::String(b.to_string()));
        }
    }
    let mut j = json!({
        "name": c.name(),
        "ranks": (0..=c.max_degree()).map(|d| c.rank(d)).collect::<Vec<_>>(),
        "boundaries": boundaries,
    });
    if with_homology {
        let h = homology(&c);
        lines.push("homology:".into());
        for (d, g) in h.groups.iter().enumerate() {
            lines.push(format!("  H_{d} = {g} (rank {}, torsion {:?})", g.betti, g.torsion));
        }
        j["homology"] = Value::Array(
            h.groups
                .iter()
                .map(|g| {
                    json!({
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()
                    })
                })
                .collect(),
        );
    }
    Ok((lines.join("\n"), j))
}

fn cmd_diagonal(file: &Path, simplex: &str, i: usize) -> CmdOutput {
    let x = load_complex(file)?;
    let Some(r) = x.lookup(simplex) else {
        return Err(Failure::Parse(format!("no simplex `{simplex}` in `{}`", x.name())));
    };
    let s = canonical_structure(&x);
    let sigma = Chain::generator(r.0, simplex.to_string());
    let value = s.evaluate(i, false, &sigma).map_err(|e| Failure::Semantic(e.to_string()))?;
    let text = format!("ξ(e{i} ⊗ {simplex}) = {value}");
    let terms: Vec<Value> = value
        .terms()
        .map(|(t, c)| json!({ "left": t.left, "right": t.right, "coeff": c }))
        .collect();
    Ok((text, json!({ "simplex": simplex, "i": i, "terms": terms })))
}

fn cmd_reconstruct(file: &Path, out: Option<&Path>) -> CmdOutput {
    let x = load_complex(file)?;
    let c = normalized_chains(&x);
    let s = canonical_structure(&x);
    let r = reconstruct_2_skeleton(&c, &s).map_err(|e| Failure::Semantic(e.to_string()))?;
    let mut lines = vec![format!("reconstruction of hom(★, N({}))", x.name())];
    for e in &r.witnesses {
        let targets: Vec<String> = e.witnesses.iter().map(|w| w.label()).collect();
        let plural = if e.witnesses.len() == 1 { "witness" } else { "witnesses" };
        lines.push(format!(
            "  dimension {}: {} {plural} ({} signed candidates rejected): {}",
            e.dim,
            e.witnesses.len(),
            e.rejected.len(),
            targets.join(", ")
        ));
    }
    let j_witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|e| {
            json!({
                "dim": e.dim,
                "witnesses": e.witnesses.iter().map(|w| w.label()).collect::<Vec<_>>(),
                "rejected": e.rejected.iter()
                    .map(|c| json!({"target": c.target, "sign": c.sign, "reason": c.reason.to_string()}))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    if !r.issues.is_empty() {
        let mut msg = lines;
        for issue in &r.issues {
            msg.push(format!("  issue: {issue}"));
        }
        return Err(Failure::Semantic(msg.join("\n")));
    }
    let rc = r.complex.as_ref().expect("no issues means complex built");
    let json_text = io::complex_to_json(rc);
    if let Some(path) = out {
        fs::write(path, &json_text)
            .map_err(|e| Failure::Parse(format!("cannot write {}: {e}", path.display())))?;
        lines.push(format!("wrote {}", path.display()));
    }
    let j = json!({ "name": rc.name(), "witnesses": j_witnesses, "counts": rc.simplex_counts() });
    Ok((lines.join("\n"), j))
}

/// Map files are either delta maps ("assignment") or chain maps ("maps").
fn load_map_as_chain_map(
    path: &Path,
    src: &DeltaComplex,
    tgt: &DeltaComplex,
) -> Result<ChainMap, Failure> {
    let text = read_file(path)?;
    let raw: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if raw.get("assignment").is_some() {
        let file = io::parse_map(&text).map_err(|e| Failure::Parse(e.to_string()))?;
        let f = io::build_delta_map(&file, src, tgt).map_err(|e| Failure::Parse(e.to_string()))?;
        let report = f.validate();
        if !report.is_valid() {
            return Err(Failure::Semantic(format!("delta map invalid:\n{report}")));
        }
        chains_of_map(&f).map_err(|e| Failure::Semantic(e.to_string()))
    } else if raw.get("maps").is_some() {
        let file = io::parse_chain_map(&text).map_err(|e| Failure::Parse(e.to_string()))?;
        io::build_chain_map(&file, &normalized_chains(src), &normalized_chains(tgt))
            .map_err(|e| Failure::Parse(e.to_string()))
    } else {
        Err(Failure::Parse(format!(
            "{}: neither a delta-map (assignment) nor a chain-map (maps) file",
            path.display()
        )))
    }
}

fn cmd_compare(src: &Path, tgt: &Path, mapfile: &Path, i_max: Option<usize>) -> CmdOutput {
    let x = load_complex(src)?;
    let y = load_complex(tgt)?;
    let f = load_map_as_chain_map(mapfile, &x, &y)?;

    let chain_report = verify_chain_map(&f);
    if !chain_report.is_valid() {
        return Err(Failure::Semantic(format!("not a chain map:\n{chain_report}")));
    }
    let s_src: SteenrodStructure = canonical_structure(&x);
    let s_tgt = canonical_structure(&y);
    let i_max = i_max.unwrap_or(x.dim() + 1);
    let cert = verify_morphism(&f, &s_src, &s_tgt, i_max)
        .map_err(|e| Failure::Semantic(e.to_string()))?;
    if !cert.is_morphism() {
        return Err(Failure::Semantic(format!("not a Steenrod morphism:\n{cert}")));
    }

    let mut lines = vec![format!(
        "Steenrod morphism verified: N({}) -> N({}) for i ≤ {i_max}",
        x.name(),
        y.name()
    )];
    let r_src = reconstruct_2_skeleton(&normalized_chains(&x), &s_src)
        .map_err(|e| Failure::Semantic(e.to_string()))?;
    let r_tgt = reconstruct_2_skeleton(&normalized_chains(&y), &s_tgt)
        .map_err(|e| Failure::Semantic(e.to_string()))?;
    let g_hat =
        induced_map(&f, &r_src, &r_tgt).map_err(|e| Failure::Semantic(e.to_string()))?;
    lines.push("induced 2-skeleton map ĝ:".into());
    for (a, b) in g_hat.pairs() {
        lines.push(format!("  {a} -> {b}"));
    }
    if g_hat.is_isomorphism() {
        lines.push("ĝ is an isomorphism of 2-skeleta".into());
    }

    // π₁ data through the witness complexes' underlying fixtures
    if x.size(0) == 0 || y.size(0) == 0 {
        let j = json!({ "morphism": true, "i_max": i_max, "induced_map": [], "pi1_images": [] });
        return Ok((lines.join("\n"), j));
    }
    let base_src = x.ids(0)[0].clone();
    let base_tgt = y.ids(0)[0].clone();
    let p_src = presentation(&x, &base_src).map_err(|e| Failure::Semantic(e.to_string()))?;
    let p_tgt = presentation(&y, &base_tgt).map_err(|e| Failure::Semantic(e.to_string()))?;
    // ĝ lives on witness labels w(σ); transport it back to simplex ids
    let pairs: Vec<(String, String)> = g_hat
        .pairs()
        .into_iter()
        .map(|(a, b)| (strip_witness(&a), strip_witness(&b)))
        .collect();
    let g_plain = steenrod_chains::DeltaMap::from_pairs(
        &steenrod_chains::skeleton(&x, 2.min(x.dim())),
        &steenrod_chains::skeleton(&y, 2.min(y.dim())),
        &pairs,
    )
    .map_err(|e| Failure::Semantic(e.to_string()))?;
    let h = induced_homomorphism(&g_plain, &p_src, &p_tgt)
        .map_err(|e| Failure::Semantic(e.to_string()))?;
    lines.push(format!("π₁({}) presentation: {p_src}", x.name()));
    lines.push(format!("π₁({}) presentation: {p_tgt}", y.name()));
    lines.push("π₁(ĝ) generator images:".into());
    for (g, w) in &h.images {
        lines.push(format!("  {g} -> {w}"));
    }
    lines.push(format!("abelianized π₁ matrix (rows = target generators): {:?}", h.matrix));

    let j = json!({
        "morphism": true,
        "i_max": i_max,
        "induced_map": g_hat.pairs().into_iter().map(|(a, b)| json!({"from": a, "to": b})).collect::<Vec<_>>(),
        "isomorphism": g_hat.is_isomorphism(),
        "pi1_images": h.images.iter().map(|(g, w)| json!({"generator": g, "image": w.to_string()})).collect::<Vec<_>>(),
        "pi1_matrix": h.matrix,
    });
    Ok((lines.join("\n"), j))
}

fn strip_witness(label: &str) -> String {
    label
        .strip_prefix("w(")
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(label)
        .to_string()
}

fn cmd_pi1(file: &Path, base: Option<&str>) -> CmdOutput {
    let x = load_complex(file)?;
    if x.size(0) == 0 {
        return Err(Failure::Semantic(format!("`{}` has no vertices", x.name())));
    }
    let base = base.map(str::to_string).unwrap_or_else(|| x.ids(0)[0].clone());
    let p = presentation(&x, &base).map_err(|e| Failure::Semantic(e.to_string()))?;
    let inv = abelianization(&p);
    let torsion: Vec<String> = inv.torsion.iter().map(|t| t.to_string()).collect();
    let text = format!(
        "π₁({}, {base}) = {p}\nabelianization: rank {}, torsion [{}]\nH₁ ≅ {inv}",
        x.name(),
        inv.rank,
        torsion.join(", "),
    );
    let j = json!({
        "basepoint": base,
        "generators": p.generators,
        "relators": p.relators.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "tree": p.tree,
        "rank": inv.rank,
        "torsion": torsion,
    });
    Ok((text, j))
}

fn cmd_convert(file: &Path, to: &str, max_dim: usize, out: Option<&Path>) -> CmdOutput {
    let x = load_complex(file)?;
    if max_dim < x.dim() {
        return Err(Failure::Parse(format!(
            "--max-dim {max_dim} is below the complex dimension {}",
            x.dim()
        )));
    }
    let s = freely_degenerate(&x, max_dim);
    match to {
        "simplicial" => {
            let mut lines = vec![format!("simplicial set 𝔡({}) up to dimension {max_dim}", x.name())];
            let mut dims = Vec::new();
            for m in 0..=max_dim {
                let pairs = s.simplices(m);
                let nondeg = pairs.iter().filter(|p| p.is_nondegenerate()).count();
                let labels: Vec<String> = pairs.iter().map(|p| s.label(p)).collect();
                lines.push(format!(
                    "  dim {m}: {} simplices ({} nondegenerate): {}",
                    pairs.len(),
                    nondeg,
                    labels.join(", ")
                ));
                dims.push(json!({ "dim": m, "count": pairs.len(), "nondegenerate": nondeg, "labels": labels }));
            }
            Ok((lines.join("\n"), json!({ "name": x.name(), "dims": dims })))
        }
        "delta" => {
            let d = s.forget(max_dim);
            let json_text = io::complex_to_json(&d);
            let mut lines =
                vec![format!("𝔣(𝔡({})) up to dimension {max_dim}: counts {}", x.name(), counts_line(&d))];
            if let Some(path) = out {
                fs::write(path, &json_text)
                    .map_err(|e| Failure::Parse(format!("cannot write {}: {e}", path.display())))?;
                lines.push(format!("wrote {}", path.display()));
            } else {
                lines.push(json_text);
            }
            Ok((lines.join("\n"), json!({ "name": d.name(), "counts": d.simplex_counts() })))
        }
        _ => unreachable!("clap validates --to"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Chain { file, homology } => cmd_chain(file, *homology),
        Command::Diagonal { file, simplex, i } => cmd_diagonal(file, simplex, *i),
        Command::Reconstruct { file, out } => cmd_reconstruct(file, out.as_deref()),
        Command::Compare { src, tgt, mapfile, i_max } => cmd_compare(src, tgt, mapfile, *i_max),
        Command::Pi1 { file, base } => cmd_pi1(file, base.as_deref()),
        Command::Convert { file, to, max_dim, out } => {
            cmd_convert(file, to, *max_dim, out.as_deref())
        }
    };
    match result {
        Ok((text, j)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&j).unwrap());
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Semantic(msg)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"status": "violation", "message": msg}))
                        .unwrap()
                );
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"status": "parse-error", "message": msg}))
                        .unwrap()
                );
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(2)
        }
    }
}
