// Change-of-basis matrices N and P and their product.
use dyck_garnir::permmod::{matrix_n, matrix_n_q, matrix_p, matrix_p_q};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, p) = (matrix_n(2, 2)?, matrix_p(2, 2)?);
    println!("N =\n{n}\nP =\n{p}");
    let product = n.multiply(&p)?;
    println!("N·P is the identity: {}", product.is_identity());
    print!("{}", p.to_csv()?);
    let q = matrix_n_q(2, 2)?.multiply(&matrix_p_q(2, 2)?)?;
    println!("N(q)·P(q) is the identity: {}", q.is_identity());
    println!("{}", matrix_p_q(1, 2)?.to_json());
    Ok(())
}
