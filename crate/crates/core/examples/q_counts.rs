// q-analogues: tilings weighted by q^(number of tiles).
use dyck_garnir::dyck::{ce_qpoly, ci_qpoly};
use dyck_garnir::partition::{box_partitions, Partition};
use num_bigint::BigInt;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "(4,3,2,1)".parse()?;
    for mu in box_partitions(4, 4)
        .into_iter()
        .filter(|m| lambda.contains(m))
        .take(8)
    {
        let i = ci_qpoly(&lambda, &mu)?;
        let e = ce_qpoly(&lambda, &mu);
        println!(
            "{mu:>8}: i(q) = {i}   e(q) = {e}   i(1) = {}",
            i.eval(&BigInt::from(1))
        );
    }
    Ok(())
}
