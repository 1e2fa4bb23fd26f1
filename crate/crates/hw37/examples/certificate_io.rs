//! Certificate round trips: canonical JSON (byte-stable), the paper-style
//! text rendering, and re-verification of a reloaded certificate.
//!
//! Run: cargo run --example certificate_io

use hw37::assemble::assemble_hw;
use hw37::cert::Certificate;
use hw37::verify::verify;

fn main() {
    let fac = assemble_hw(21, 9).unwrap();
    let cert = Certificate::from_factorization(&fac);

    let json = cert.to_json();
    println!("JSON ({} bytes):\n{}", json.len(), &json[..120.min(json.len())]);

    let text = cert.to_text();
    println!("text rendering (first factors):");
    for line in text.lines().take(4) {
        println!("  {line}");
    }

    let reloaded = Certificate::from_json(&json).unwrap();
    assert_eq!(cert, reloaded);
    assert_eq!(json, reloaded.to_json(), "re-export is byte-identical");

    let report = verify(&reloaded, reloaded.n, reloaded.r, reloaded.s);
    println!("\nreloaded certificate: {report}");
    assert!(report.accepted());
}
