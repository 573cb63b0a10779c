//! Run the golden fixture and print one line per check.

use ldp::verify::{all_pass, run, Status};

fn main() {
    let out = run();
    for o in &out {
        let tag = if o.status == Status::Pass {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{tag} [{}] {}", o.criterion, o.id);
    }
    std::process::exit(if all_pass(&out) { 0 } else { 1 });
}
