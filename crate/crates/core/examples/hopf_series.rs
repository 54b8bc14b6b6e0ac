//! Certifies k ⊂ k^{A₄} ⊂ k^{A₄}#kC₅ and classifies its factors.

use crossext::hopf::series::{verify_subnormal_series, HopfChain};
use crossext::hopf::{kac_bicrossed, kac_index};
use crossext::matched::a5_instance;

fn main() {
    let mp = a5_instance().pair;
    let h = kac_bicrossed(&mp).expect("matched pair");
    let middle: Vec<_> = mp.gamma().elements().map(|s| h.basis_vector(kac_index(&mp, s, mp.g().identity()))).collect();
    let top: Vec<_> = (0..h.dim()).map(|i| h.basis_vector(i)).collect();
    let chain = HopfChain::from_ascending(h.clone(), vec![vec![h.unit_vector().to_vec()], middle, top]);
    match verify_subnormal_series(&chain) {
        Ok(cert) => {
            for f in cert.factors.iter().rev() {
                println!("factor of dim {:2}: commutative {}, cocommutative {}", f.dim, f.commutative, f.cocommutative);
            }
        }
        Err(e) => println!("rejected: {e}"),
    }
}
