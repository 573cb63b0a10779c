//! Singular members of the cubic pencil over ℚ and over 𝔽_p, and the type
//! of the singular point on a chosen member.
//!
//! cargo run --example pencil -- 5

use std::sync::Arc;

use ldp::pencil::cubic::{
    classify_member, pencil_singular_locus, quadratic_factor_double_root, FieldSpec,
};
use ldp::pencil::field::{Fp, Quad, Rat};

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("characteristic"))
        .unwrap_or(5);

    let show = |f: FieldSpec| match pencil_singular_locus(f) {
        Ok(l) => println!(
            "{f:?}: locus {}, repeated root {}",
            l,
            quadratic_factor_double_root(f)
        ),
        Err(e) => println!("{f:?}: {e}"),
    };
    show(FieldSpec::Rationals);
    show(FieldSpec::parse(p).unwrap());

    // the member over 𝔽_5 where both roots of t² + 11t − 1 collide
    let r = classify_member(&Fp::new(1, 5), &Fp::new(2, 5)).unwrap();
    println!("[1:2] over F_5: {:?} at {:?}", r.kind, r.point);

    // a root of t² + 11t − 1 over ℚ(θ)
    let m = Quad::modulus(Rat::new(11, 1), Rat::new(-1, 1));
    let one = Quad::base(Rat::new(1, 1), &m);
    let r = classify_member(&one, &Quad::theta(&Arc::clone(&m))).unwrap();
    println!("[1:θ] over Q(θ): {:?}", r.kind);
}
