// The homogeneous Garnir element of a two-row shape and of a longer one.
use dyck_garnir::garnir::{brick_data, garnir_tableau, modified_garnir, relation_json, sigma_word};
use dyck_garnir::partition::{Node, Partition};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pi: Partition = "(11,5,3,1)".parse()?;
    let node = Node::new(1, 5);
    println!("Garnir tableau\n{}", garnir_tableau(&pi, node)?);
    let data = brick_data(&pi, node, 3, 0)?;
    for brick in &data.bricks {
        let nodes: Vec<String> = brick.iter().map(|n| n.to_string()).collect();
        println!("brick {}", nodes.join(" "));
    }
    println!("f = {}, g = {}", data.f, data.g);
    for i in 1..=data.f {
        println!("σ{i} = {}", sigma_word(&data, i)?);
    }
    for t in modified_garnir(&pi, node, 3, 0)? {
        println!(
            "{} · λ = {}  ψ = {}\n{}",
            t.coeff, t.lambda, t.psi_word, t.tableau
        );
    }
    let rel = relation_json(&"(8,4)".parse()?, Node::new(1, 4), 2, 0)?;
    println!("{}", serde_json::to_string(&rel)?);
    Ok(())
}
