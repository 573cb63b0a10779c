//! Members D₂ and D₃ of the weighted model in P(1,1,2,3) over 𝔽₅.

use ldp::pencil::weighted::weighted_member_check;

fn main() {
    for i in [2, 3] {
        let r = weighted_member_check(i).unwrap();
        println!(
            "D_{i}: degree {:?} ({}), support {:?} ({}), smooth {}",
            r.degree, r.degree_ok, r.support_points, r.support_ok, r.smooth
        );
    }
}
