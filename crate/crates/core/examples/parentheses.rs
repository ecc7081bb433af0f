// Parenthesis sequences, the nesting poset and the hook formula for F.
use dyck_garnir::dyck::ce;
use dyck_garnir::fweight::weight;
use dyck_garnir::paren::{chord_relation, hook_formula_f, nesting_poset, paren_sequence};
use dyck_garnir::partition::{box_partitions, Partition};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "(5,3,3,1)".parse()?;
    let seq = paren_sequence(&lambda);
    println!("window {}  padded {seq}", seq.window_string());
    print!("{}", seq.numbered(0));
    let poset = nesting_poset(&lambda, seq.pair_count())?;
    println!("{} pairs, hook count {}", poset.len(), poset.hook_count());
    println!(
        "hook formula {} = F {}",
        hook_formula_f(&lambda)?,
        weight(&lambda)
    );

    let parts = box_partitions(3, 3);
    let related = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l, m)))
        .filter(|(l, m)| chord_relation(l, m))
        .inspect(|(l, m)| assert!(ce(l, m)))
        .count();
    println!("{related} chord-related pairs in the 3x3 box");
    Ok(())
}
