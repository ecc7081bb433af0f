// The classical Garnir element as a sum of σ-products, next to the τ expansion.
use dyck_garnir::garnir::{classical_garnir, expand_tau};
use dyck_garnir::partition::{Node, Partition};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pi: Partition = "(11,5,3,1)".parse()?;
    for t in classical_garnir(&pi, Node::new(1, 5), 3, 0)? {
        let sigma: Vec<String> = t.sigma.iter().map(|i| format!("σ{i}")).collect();
        println!(
            "{} · {}  ψ = {}",
            t.coeff,
            if sigma.is_empty() {
                "1".into()
            } else {
                sigma.join(" ")
            },
            t.psi_word
        );
    }
    for (lambda, c) in expand_tau(&"(2,1)".parse()?, 2, 2)? {
        println!("τ expansion of (2,1): {c} · {lambda}");
    }
    Ok(())
}
