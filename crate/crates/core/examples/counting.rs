// i(λ,μ) and e(λ,μ) by enumeration and by recurrence.
use dyck_garnir::dyck::{count_ce, count_ci, recurrence_column, CountMode};
use dyck_garnir::partition::{box_partitions, Partition};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "(3,3,2)".parse()?;
    println!("{:>10} {:>6} {:>6} {:>6}", "μ", "i", "e", "column");
    for mu in box_partitions(3, 3)
        .into_iter()
        .filter(|m| lambda.contains(m))
    {
        let brute = count_ci(&lambda, &mu, CountMode::BruteForce)?;
        let fast = count_ci(&lambda, &mu, CountMode::Recurrence)?;
        assert_eq!(brute, fast);
        let e = count_ce(&lambda, &mu, CountMode::Recurrence)?;
        let col = recurrence_column(&lambda, &mu)
            .map(|(j, _)| j.to_string())
            .unwrap_or_else(|| "-".into());
        println!("{:>10} {fast:>6} {e:>6} {col:>6}", mu.to_string());
    }
    // past the enumeration cap
    let big: Partition = "(8,7,6,5,4,3,2,1)".parse()?;
    println!(
        "i({big}, ∅) = {}",
        count_ci(&big, &Partition::empty(), CountMode::Recurrence)?
    );
    Ok(())
}
