//! Parse Dynkin-type notation, print the canonical form and |det| per component.
//!
//! cargo run --example notation -- "2[2^4]+[2;[2],[3],[5]]"

use ldp::graphs::{format_dynkin, parse_dynkin};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2[2^4]+[2;[2],[3],[5]]".to_string());
    let t = match parse_dynkin(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("canonical  {}", format_dynkin(&t));
    println!("vertices   {}", t.vertex_count());
    for g in t.components() {
        println!(
            "  {:<20} |det| = {}",
            g.to_string(),
            g.determinant().unwrap()
        );
    }
    println!("total      {}", t.determinant().unwrap());
}
