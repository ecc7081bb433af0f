// Addable and removable nodes, columns and the signed strips X(λ).
use dyck_garnir::partition::{box_partitions, strip_remove, x_set, ColumnKind, Partition};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "(6,4,4,3,2,2)".parse()?;
    println!(
        "λ = {lambda}, size {}, conjugate {}",
        lambda.size(),
        lambda.conjugate()
    );
    for j in lambda.column_span() {
        match lambda.column_kind(j) {
            ColumnKind::Addable(n) => {
                let xs = x_set(&lambda, j)?;
                let strips: Vec<String> = xs
                    .positive()
                    .chain(xs.negative())
                    .map(|x| format!("{x} -> {}", strip_remove(&lambda, j, x).unwrap()))
                    .collect();
                println!("column {j:>3}: addable {n}  strips [{}]", strips.join(", "));
            }
            ColumnKind::Removable(n) => println!("column {j:>3}: removable {n}"),
            ColumnKind::Neither => {}
        }
    }
    println!("{} partitions fit in a 3x3 box", box_partitions(3, 3).len());
    Ok(())
}
