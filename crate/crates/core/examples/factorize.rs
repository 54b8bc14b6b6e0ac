//! Lists the exact factorizations of S₄ and the matched pairs they induce.

use crossext::groups::CayleyGroup;
use crossext::matched::{enumerate_exact_factorizations, verify_matched_pair};

fn main() {
    let s4 = CayleyGroup::symmetric(4);
    let fs = enumerate_exact_factorizations(&s4).expect("small group");
    println!("{} exact factorizations of S4", fs.len());
    for f in fs.iter().filter(|f| f.g.order() > 1 && f.gamma.order() > 1) {
        println!("  |G| = {:2}  |Γ| = {:2}  matched: {}", f.g.order(), f.gamma.order(), verify_matched_pair(&f.pair).valid);
    }
}
