//! Simples of the equivariantization of vec_Γ under G, for Γ = C₃ and G = C₂
//! acting by inversion, and the resulting fusion rules.

use crossext::crossed::{equivariantization, pointed_crossed_from_matched_pair};
use crossext::linalg::Tolerance;
use crossext::matched::s3_instance;

fn main() {
    let d = pointed_crossed_from_matched_pair(&s3_instance().pair).expect("matched pair");
    let (ring, simples) = equivariantization(&d, 0, &Tolerance::default()).expect("semisimple");
    for (i, s) in simples.iter().enumerate() {
        println!("{}: orbit of {}, stabilizer order {}, dim {}", ring.label(i), s.point, s.stabilizer.len(), s.object.dim());
    }
    for x in 0..ring.rank() {
        for y in 0..ring.rank() {
            let terms: Vec<String> = (0..ring.rank()).filter(|&z| ring.n(x, y, z) > 0).map(|z| format!("{}·{}", ring.n(x, y, z), ring.label(z))).collect();
            println!("{} ⊗ {} = {}", ring.label(x), ring.label(y), terms.join(" + "));
        }
    }
}
