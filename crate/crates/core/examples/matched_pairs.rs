//! Builds the S₃ = C₂·C₃ matched pair, checks it, and compares it against a
//! tampered copy.

use crossext::matched::{bicrossed_group, s3_instance, verify_matched_pair, MatchedPair};

fn main() {
    let mp = s3_instance().pair;
    println!("|G| = {}, |Γ| = {}", mp.g().order(), mp.gamma().order());
    println!("matched: {}", verify_matched_pair(&mp).valid);
    let l = bicrossed_group(&mp).expect("matched pair");
    println!("G ⋈ Γ has order {}, abelian: {}", l.order(), l.is_abelian());

    let mut rhd = mp.rhd_table().to_vec();
    rhd[1][1] = 0;
    let bad = MatchedPair::new(mp.g().clone(), mp.gamma().clone(), rhd, mp.lhd_table().to_vec()).unwrap();
    let report = verify_matched_pair(&bad);
    println!("tampered: matched = {}", report.valid);
    for w in report.witnesses.iter().take(3) {
        println!("  {}: {}", w.check, w.detail);
    }
}
