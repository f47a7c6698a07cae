//! Classical Schubert calculus on Gr(2,4): the four-lines problem.
//!
//! cargo run --example schubert_calculus

use verlinde_qh::{CohClass, Shape};

fn main() -> verlinde_qh::Result<()> {
    let gr = Shape::from_rn(2, 4)?;
    let h = CohClass::of_partition(gr, &[1, 0].into())?;

    let mut power = CohClass::basis(gr, gr.fundamental());
    for step in 1..=4 {
        power = gr.classical_product(&power, &h)?;
        println!("sigma_1^{step} = {}", render(&power));
    }
    println!(
        "lines meeting four general lines in P^3: {}",
        power.coeff(&gr.point())
    );

    for s in gr.subsets() {
        println!(
            "{s}: lambda = {}, codim {}, dual {}",
            gr.lambda_of_subset(&s)?,
            gr.codim(&s)?,
            gr.dual_subset(&s)?
        );
    }
    println!(
        "diagonal decomposition holds: {}",
        gr.diagonal_decomposition_check()
    );
    Ok(())
}

fn render(c: &CohClass) -> String {
    let terms: Vec<String> = c.terms().map(|(s, x)| format!("{x}*w{s}")).collect();
    terms.join(" + ")
}
