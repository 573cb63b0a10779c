//! Picard lattice of the [2,4] resolution: pullback of G₂, its round-up, the
//! anticanonical identities and the χ comparison on random zero-sum tuples.

use ldp::picard::{anticanonical_pullback_identity, chi_pair, preset_resolution, zero_sum_tuples};
use ldp::rational::fmt_qs;

fn main() {
    let lat = preset_resolution("[2,4]").unwrap();
    println!("basis      {:?}", lat.basis());
    println!("contracted {:?}", lat.contracted());

    let g2 = lat.curve("G_2").unwrap();
    let pb = lat.pullback_weil(&g2).unwrap();
    let along = lat.express(&pb, &["G_2", "G_1", "C_2"]).unwrap().unwrap();
    println!("pullback of G_2 along G_2, G_1, C_2: {:?}", fmt_qs(&along));
    let up = lat.round_up(&pb, &["C_2", "G_1", "G_2"]).unwrap();
    println!("round-up   {up}");

    for d in ["[3]", "[2,4]"] {
        println!(
            "identity {d:<6} holds: {}",
            anticanonical_pullback_identity(d).unwrap().holds
        );
    }
    let tuples = zero_sum_tuples(7, 10);
    let agree = tuples.iter().filter(|t| {
        let (a, b) = chi_pair(t).unwrap();
        a == b
    });
    println!("chi agrees on {}/{} tuples", agree.count(), tuples.len());
}
