//! Isomorphism search between based rings.

use crossext::groups::CayleyGroup;
use crossext::hopf::group_algebra;
use crossext::linalg::Tolerance;
use crossext::repth::fusion_ring_of_hopf;
use crossext::rings::{based_ring_isomorphism, group_ring};

fn main() {
    let c2 = CayleyGroup::cyclic(2);
    let c4 = CayleyGroup::cyclic(4);
    let v4 = CayleyGroup::direct_product(&c2, &c2);
    println!("Z[C4] ≅ Z[C2×C2]: {:?}", based_ring_isomorphism(&group_ring(&c4), &group_ring(&v4), 1000).unwrap());
    // Rep of an abelian group is its dual group
    let rep = fusion_ring_of_hopf(&group_algebra(&c4), 0, &Tolerance::default()).unwrap();
    println!("K(Rep C4) ≅ Z[C4]: {:?}", based_ring_isomorphism(&rep, &group_ring(&c4), 1000).unwrap());
}
