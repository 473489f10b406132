// Reading and writing graph and certificate files.

use std::error::Error;

use resolvedim::families::make_cycle;
use resolvedim::io::{graph_to_string, parse_certificate, parse_graph, CertificateFile};
use resolvedim::verify_adjacency_set;

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = make_cycle(5)?;
    let text = graph_to_string(&g);
    println!("{text}");
    assert_eq!(parse_graph(&text)?, g);

    let cert = CertificateFile::set(&[0, 1]).with_recipe("by hand");
    let text = serde_json::to_string(&cert)?;
    println!("{text}");
    let set = parse_certificate(&text)?
        .certificate()?
        .to_set()
        .unwrap_or_default();
    println!("valid on C5: {}", verify_adjacency_set(&g, &set)?.valid);

    match parse_graph(r#"{"n": 2, "directed": false, "edges": [[0, 0]]}"#) {
        Ok(_) => println!("unexpectedly accepted a loop"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
