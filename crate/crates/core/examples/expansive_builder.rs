// The unique cover-expansive tiling, built greedily.
use dyck_garnir::dyck::{ce, ce_tiling, find_ce_tiling, render};
use dyck_garnir::partition::{Partition, SkewShape};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let outer: Partition = "(6,6,4,3,1,1)".parse()?;
    for inner in ["(4,1,1)", "(2,2)", "(5,5,4)"] {
        let inner: Partition = inner.parse()?;
        let shape = SkewShape::new(outer.clone(), inner.clone())?;
        match find_ce_tiling(&shape) {
            Some(t) => {
                assert_eq!(Some(&t), ce_tiling(&outer, &inner).as_ref());
                println!("{shape}: e = 1\n{}", render(&t));
            }
            None => {
                assert!(!ce(&outer, &inner));
                println!("{shape}: e = 0");
            }
        }
    }
    Ok(())
}
