//! A curve meeting an exceptional graph: pairing ⟨a,b⟩, verdict, lct on the
//! minimal resolution, and the closed-form log discrepancies against the solve.
//!
//! cargo run --example incidence -- "[2,4]" 1,0

use ldp::discrepancy::{
    classify_incidence, closed_form_f, lct_min_resolution, matching_displays, pair_coefficients,
};
use ldp::graphs::parse_dynkin;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "[2,4]".into());
    let a: Vec<u32> = args
        .next()
        .unwrap_or_else(|| "1,0".into())
        .split(',')
        .map(|s| s.trim().parse().expect("incidence entry"))
        .collect();
    let g = parse_dynkin(&text).unwrap().components()[0].clone();

    let c = classify_incidence(&g, &a).unwrap();
    println!(
        "case {:?}, <a,b> = {}, verdicts {:?}",
        c.witness, c.pairing, c.verdicts
    );
    let l = lct_min_resolution(&g, &a).unwrap();
    println!(
        "lct on the minimal resolution {} (exact: {})",
        l.value, l.exact
    );

    let data = pair_coefficients(&g, &a).unwrap();
    for v in 0..g.len() {
        let shown = matching_displays(&g, &a, v).unwrap();
        match closed_form_f(&g, &a, v) {
            Ok(f) => println!("  E_{v}: f = {}  closed form {f} via {shown:?}", data.f[v]),
            Err(_) => println!("  E_{v}: f = {}", data.f[v]),
        }
    }
}
