//! Genus-zero Gromov–Witten numbers, plain and twisted.
//!
//! cargo run --example gromov_witten

use verlinde_qh::{gw_number, gw_twisted, GwQuery, Shape, Subset};

fn main() -> verlinde_qh::Result<()> {
    let gr = Shape::from_rn(2, 4)?;
    let pt = gr.point();
    let line: Subset = gr.subset_of_lambda(&[2, 0].into())?;
    let plane: Subset = gr.subset_of_lambda(&[1, 1].into())?;
    println!(
        "<{line}, {plane}, {pt}>_1 = {}",
        gw_number(gr, &[line.clone(), plane.clone(), pt.clone()], 1)?
    );
    println!(
        "conics through three points: <pt,pt,pt>_2 = {}",
        gw_number(gr, &[pt.clone(), pt.clone(), pt], 2)?
    );

    let q = GwQuery::new(
        gr,
        vec![[1, 2].into(), [3, 4].into(), [1, 2].into(), [3, 4].into()],
        0,
        -2,
    )?;
    println!("{q}: expected dimension {}", q.expected_dimension());
    println!("  via shifts     {}", q.via_shift()?);
    println!("  via insertions {}", q.via_insertions()?);
    println!("  checked        {}", gw_twisted(&q)?);
    Ok(())
}
