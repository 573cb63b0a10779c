//! Discrepancies e, local index and K² for a few singularity types.

use ldp::discrepancy::{anticanonical_selfint, cartier_index, discrepancies};
use ldp::graphs::parse_dynkin;
use ldp::rational::fmt_qs;

fn main() {
    for text in ["[3]", "[2,4]", "[2^4]", "[2;[2],[3],[5]]"] {
        let g = parse_dynkin(text).unwrap().components()[0].clone();
        println!("{text:<18} e = {:?}", fmt_qs(&discrepancies(&g).unwrap()));
    }
    for text in ["2[2^4]", "2[2^4]+[3]", "2[2^4]+[2,4]"] {
        let t = parse_dynkin(text).unwrap();
        println!(
            "{text:<18} index {}  K^2 = {}",
            cartier_index(&t).unwrap(),
            anticanonical_selfint(&t).unwrap()
        );
    }
}
