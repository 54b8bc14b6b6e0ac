//! Upper central series of a few based rings.

use crossext::groups::CayleyGroup;
use crossext::hopf::group_algebra;
use crossext::linalg::Tolerance;
use crossext::repth::fusion_ring_of_hopf;
use crossext::rings::{group_ring, upper_central_series, BasedRing};

fn show(name: &str, r: &BasedRing) {
    let s = upper_central_series(r);
    let sizes: Vec<usize> = s.chain.iter().map(Vec::len).collect();
    println!("{name:10} sizes {sizes:?} nilpotent {} class {:?}", s.is_nilpotent, s.class);
}

fn main() {
    show("Z[C1]", &group_ring(&CayleyGroup::cyclic(1)));
    show("Z[S3]", &group_ring(&CayleyGroup::symmetric(3)));
    show("Z[A5]", &group_ring(&CayleyGroup::alternating(5)));
    let tol = Tolerance::default();
    for (name, g) in [("K(Rep S3)", CayleyGroup::symmetric(3)), ("K(Rep A4)", CayleyGroup::alternating(4))] {
        show(name, &fusion_ring_of_hopf(&group_algebra(&g), 0, &tol).unwrap());
    }
}
