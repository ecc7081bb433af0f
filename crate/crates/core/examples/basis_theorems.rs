// Coefficient-by-coefficient checks of the two bases of M^(f,g).
use dyck_garnir::permmod::verify_basis_theorems;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (f, g) in [(1, 1), (2, 2), (3, 4), (4, 4)] {
        let r = verify_basis_theorems(f, g)?;
        println!(
            "{f}x{g}: s in t {} ({}), t in s {} ({}), sum of t {} ({})",
            r.s_in_t.passed,
            r.s_in_t.cases,
            r.t_in_s.passed,
            r.t_in_s.cases,
            r.sum_of_t.passed,
            r.sum_of_t.cases
        );
    }
    let small = verify_basis_theorems(1, 2)?;
    println!("{}", serde_json::to_string(&small)?);
    Ok(())
}
