//! Full feasibility report for one type, as JSON.
//!
//! cargo run --example feasibility -- "2[2^4]+[2;[2],[3],[5]]"

use ldp::feasibility::feasibility_report;
use ldp::graphs::parse_dynkin;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2[2^4]+[2;[2],[3],[5]]".into());
    let t = parse_dynkin(&text).unwrap();
    let r = feasibility_report(&t).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
