//! The vertex the hunt step picks: largest discrepancy among non-(−2) chain
//! vertices and star centers.

use ldp::discrepancy::select_hunt_divisor;
use ldp::graphs::parse_dynkin;

fn main() {
    for text in [
        "2[2^4]+[3]",
        "2[2^4]+[2,4]",
        "2[2^4]+[2;[2],[3],[5]]",
        "[2^4]",
    ] {
        let t = parse_dynkin(text).unwrap();
        match select_hunt_divisor(&t) {
            Ok(h) => println!(
                "{text:<24} component {} ({}), vertex {} of weight {}, e = {}",
                h.component, h.component_notation, h.vertex, h.weight, h.coefficient
            ),
            Err(e) => println!("{text:<24} {e}"),
        }
    }
}
