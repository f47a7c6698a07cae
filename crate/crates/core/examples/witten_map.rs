//! Schubert classes mapped to the representation ring with the extra
//! variable x, and reduced to normal form modulo the cyclic shift T.
//!
//! cargo run --example witten_map

use verlinde_qh::{quantum_product, CohClass, FusionRing, QClass};

fn main() -> verlinde_qh::Result<()> {
    let ring = FusionRing::new(2, 3)?;
    let gr = ring.shape();
    for s in gr.subsets() {
        let w = ring.witten_term(&s)?;
        let t = ring.t_operator(&w)?;
        println!(
            "W(w{s}) = {} x^{}    T of it = {} x^{}",
            w.rep, w.exponent, t.rep, t.exponent
        );
    }

    let a = gr.subset_of_lambda(&[2, 1].into())?;
    let b = gr.subset_of_lambda(&[3, 1].into())?;
    let prod = quantum_product(
        gr,
        &QClass::basis(gr, a.clone()),
        &QClass::basis(gr, b.clone()),
    )?;
    let lhs = ring.reduce(&ring.witten_map_q(&prod)?)?;
    let rhs = ring.reduce(&ring.rtilde_product(
        &ring.witten_map(&CohClass::basis(gr, a))?,
        &ring.witten_map(&CohClass::basis(gr, b))?,
    )?)?;
    println!(
        "W(a * b) and W(a) W(b) agree after reduction: {}",
        lhs == rhs
    );
    Ok(())
}
