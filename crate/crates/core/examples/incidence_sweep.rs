//! Exhaustive incidence sweep: ⟨a,b⟩ ≤ 2 patterns, monotonicity, and the
//! closed-form log discrepancies against the linear solve.
//!
//! cargo run --release --example incidence_sweep -- [max_vertices] [max_weight] [max_a]

use ldp::discrepancy::incidence_sweep;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"))
        .collect();
    let (nv, w, a) = (
        *args.first().unwrap_or(&6),
        *args.get(1).unwrap_or(&5) as u32,
        *args.get(2).unwrap_or(&4) as u32,
    );
    let r = incidence_sweep(nv, w, a);
    println!("graphs            {}", r.graphs);
    println!("klt graphs        {}", r.klt_graphs);
    println!("incidence vectors {}", r.incidence_vectors);
    println!("pairing <= 2      {}", r.admissible_with_small_pairing);
    println!("display checks    {}", r.display_checks);
    println!("monotone checks   {}", r.monotonicity_checks);
    println!("failures          {}", r.failures.len());
    for f in r.failures.iter().take(20) {
        println!("  {f}");
    }
}
