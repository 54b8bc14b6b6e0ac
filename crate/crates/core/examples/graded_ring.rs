//! The G⋈Γ-graded ring attached to a crossed action, with its neutral
//! component and nilpotency class.

use crossext::crossed::{dual_graded_ring, pointed_crossed_from_matched_pair};
use crossext::matched::a5_instance;
use crossext::rings::{check_grading, is_faithful, neutral_component, upper_central_series};

fn main() {
    let d = pointed_crossed_from_matched_pair(&a5_instance().pair).expect("matched pair");
    let (ring, grading) = dual_graded_ring(&d).expect("graded ring");
    println!("rank {}, grading group of order {}", ring.rank(), grading.group.order());
    println!("graded: {}, faithful: {}", check_grading(&ring, &grading), is_faithful(&grading));
    println!("neutral component: {:?}", neutral_component(&grading));
    println!("nilpotency class: {:?}", upper_central_series(&ring).class);
}
