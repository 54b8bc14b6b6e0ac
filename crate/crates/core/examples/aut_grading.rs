//! The Aut(G)-grading on vec_G induced by conjugation.

use crossext::groups::CayleyGroup;
use crossext::repth::{aut_grading, vect_group_model};

fn main() {
    for (name, g) in [("S3", CayleyGroup::symmetric(3)), ("C4", CayleyGroup::cyclic(4)), ("A4", CayleyGroup::alternating(4))] {
        let a = aut_grading(&vect_group_model(&g), &g).expect("valid model");
        println!("vect_{name}: image of order {}, neutral component {:?}", a.grading.group.order(), a.neutral);
    }
}
