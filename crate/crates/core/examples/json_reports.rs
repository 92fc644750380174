//! Ring specs in JSON and the sorted-key reports the command line emits.

use fpdim::cli::commands::{classify, Options};
use fpdim::cli::{build_ring, parse_ring_spec, Report};

fn main() -> fpdim::Result<()> {
    let text = r#"{
        "kind": "family",
        "name": "idealization",
        "base": {"kind": "poly_quotient", "p": 3, "variables": ["x"], "relations": ["x^2"]},
        "module": {"type": "residue"}
    }"#;
    let spec = parse_ring_spec(text)?;
    let ring = build_ring(&spec)?;
    println!("built {} ({})", ring.description(), ring.backend());
    let (results, status) = classify(&ring, &[], None, &Options::default())?;
    let report = Report::new("classify", Some(spec), results, status, 0);
    let json = report.to_json();
    println!("{json}");
    assert_eq!(Report::from_json(&json)?, report);
    println!("exit code {}", report.status.exit_code());
    Ok(())
}
