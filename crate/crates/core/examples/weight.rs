// The weight F(λ) through highest-node factorization, with every choice.
use dyck_garnir::fweight::{
    factor_step, highest_nodes, recurrence_sides, weight, weight_all_choices,
};
use dyck_garnir::partition::Partition;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "(5,3,3,1)".parse()?;
    println!("F{lambda} = {}", weight(&lambda));
    for pivot in highest_nodes(&lambda)? {
        let step = factor_step(&lambda, pivot)?;
        println!(
            "  at {pivot}: C = {}, pieces {} and {}",
            step.binom, step.sigma, step.tau
        );
    }
    for (node, value) in weight_all_choices(&lambda) {
        println!("  choice {node} gives {value}");
    }
    for node in lambda.addable_nodes() {
        let (lhs, rhs) = recurrence_sides(&lambda, node.column())?;
        println!(
            "  column {:>2}: F(λ⁺) + Σ F(λ^[x]) = {lhs}, 2F(λ) = {rhs}",
            node.column()
        );
    }
    Ok(())
}
