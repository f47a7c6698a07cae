//! The shift operation trading a unit of twist for a relabelled insertion.
//!
//! cargo run --example shift_operations

use verlinde_qh::{shift, unshift, Shape};

fn main() -> verlinde_qh::Result<()> {
    let gr = Shape::from_rn(2, 4)?;
    for s in gr.subsets() {
        let (j, e) = shift(gr, &s, 1)?;
        let back = unshift(gr, &j, e)?;
        println!("({s}, d=1) -> ({j}, d={e}) -> ({}, d={})", back.0, back.1);
    }

    // n applications of shift return to the start with the degree lowered by r
    let gr = Shape::from_rn(3, 7)?;
    let start = gr.subset_of_lambda(&[3, 1, 0].into())?;
    let (mut s, mut d) = (start.clone(), 0);
    for _ in 0..gr.n() {
        (s, d) = shift(gr, &s, d)?;
    }
    println!("{gr}: shift^{} {start} = {s} with d = {d}", gr.n());
    Ok(())
}
