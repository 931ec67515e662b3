//! Prints one `BranchFixture` per combine branch, for pasting into `sweep.rs`.

use matchcert::io::emit_graph6;
use matchcert::sweep::discover_branch_instances;
fn main() {
    for (g, w, m1, m2, b) in discover_branch_instances(2024, 100_000) {
        let p = |m: &matchcert::Matching| {
            m.edges()
                .iter()
                .map(|e| format!("({}, {})", e.lo(), e.hi()))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("    BranchFixture {{\n        graph6: {:?},\n        witness: NearMatchingWitness {{ x: {}, a: {}, b: {}, c: {} }},\n        first: &[{}],\n        second: &[{}],\n        branch: CombineBranch::{:?},\n    }},", emit_graph6(&g).unwrap(), w.x, w.a, w.b, w.c, p(&m1), p(&m2), b);
    }
}
