//! Enumerate the 2[2^4] + (†) families over a small box and print a
//! feasibility line for each instance.

use ldp::feasibility::{feasibility_report_with, BogomolovMode};
use ldp::graphs::{enumerate_families, format_dynkin, ParamRange};

fn main() {
    let n = ParamRange { lo: 0, hi: 2 };
    let m = ParamRange { lo: 1, hi: 2 };
    for (inst, t) in enumerate_families(n, m, None) {
        let r = feasibility_report_with(&t, BogomolovMode::Transcribed).unwrap();
        println!(
            "family {:>2} {:<28} K^2 {:>6}  sum {:>8}  {:?}",
            inst.family,
            format_dynkin(&t),
            r.k_sq.to_string(),
            r.bogomolov_sum.to_string(),
            r.bogomolov
        );
    }
}
