//! The Kac algebra of the A₅ = A₄·C₅ factorization: axioms, the exact
//! sequence k^Γ → H → kG, and the dimensions of its simple modules.

use crossext::hopf::{exact_sequence_check, is_cocommutative, is_commutative, kac_bicrossed, kac_sequence_maps, verify_hopf_axioms};
use crossext::linalg::Tolerance;
use crossext::matched::a5_instance;
use crossext::repth::simple_modules;

fn main() {
    let mp = a5_instance().pair;
    let h = kac_bicrossed(&mp).expect("matched pair");
    println!("dim H = {}", h.dim());
    println!("Hopf axioms: {}", verify_hopf_axioms(&h).valid);
    println!("commutative: {}, cocommutative: {}", is_commutative(&h), is_cocommutative(&h));
    let (sub, pi, quotient) = kac_sequence_maps(&mp);
    println!("exact sequence: {}", exact_sequence_check(&h, &sub, &pi, &quotient).valid);
    let dims: Vec<usize> = simple_modules(&h, 0, &Tolerance::default()).unwrap().iter().map(|m| m.dim()).collect();
    println!("simple dims: {dims:?}");
}
