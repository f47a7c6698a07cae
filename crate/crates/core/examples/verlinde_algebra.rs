//! The SU(r) level-k fusion ring and conformal-block dimensions.
//!
//! cargo run --example verlinde_algebra -- 3 2

use verlinde_qh::FusionRing;

fn main() -> verlinde_qh::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (r, k) = match args[..] {
        [r, k] => (r, k),
        _ => (2, 2),
    };
    let ring = FusionRing::new(r, k)?;
    println!(
        "SU({r}) at level {k}: {} representations",
        ring.reps().len()
    );
    for a in ring.reps() {
        for b in ring.reps().iter().filter(|b| *b >= a) {
            let p = ring.product_of(&[a.clone(), b.clone()])?;
            let terms: Vec<String> = p
                .terms()
                .map(|(rep, c)| {
                    if c == &1.into() {
                        rep.to_string()
                    } else {
                        format!("{c}*{rep}")
                    }
                })
                .collect();
            println!("{a} * {b} = {}", terms.join(" + "));
        }
    }
    for g in 0..=4 {
        println!("N_{g} = {}", ring.conformal_block_dim(g, &[])?);
    }
    Ok(())
}
