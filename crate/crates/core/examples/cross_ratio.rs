//! Minimal polynomials of the 24 cross ratios of the four singular parameters
//! over ℚ, with the squarefree part of each discriminant.

use ldp::pencil::crossratio::{cross_ratio_minimal_polynomials, squarefree_core};

fn main() {
    for f in cross_ratio_minimal_polynomials() {
        let disc = f.discriminant();
        println!(
            "{:<20} disc {disc}  core {}  irreducible {}",
            f.to_string(),
            squarefree_core(&disc).unwrap(),
            f.is_irreducible()
        );
    }
}
