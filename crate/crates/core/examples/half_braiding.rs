//! The half-braiding of H on its regular comodule, and the test
//! σ² = id ⇔ H commutative.

use crossext::groups::CayleyGroup;
use crossext::hopf::braiding::{half_braiding_exact, regular_comodule, sigma_squared_defect, symmetric_central_algebra_test};
use crossext::hopf::{dual_hopf, group_algebra, HopfAlgebra};

fn main() {
    let s3 = CayleyGroup::symmetric(3);
    let cases: [(&str, HopfAlgebra); 3] =
        [("k^S3", dual_hopf(&group_algebra(&s3))), ("kS3", group_algebra(&s3)), ("kC6", group_algebra(&CayleyGroup::cyclic(6)))];
    for (name, h) in cases {
        let sigma = half_braiding_exact(&h, &regular_comodule(&h)).unwrap();
        let t = symmetric_central_algebra_test(&h).unwrap();
        let defect = sigma_squared_defect(&h).unwrap();
        println!(
            "{name:5} σ is {0}x{0}, σ² = id: {1}, commutative: {2}, ‖σ² − I‖ = {defect:.2e}",
            sigma.len(),
            t.sigma_squared_identity,
            t.commutative
        );
    }
}
