// How s_i acts on the s-basis of the permutation module.
use dyck_garnir::partition::Partition;
use dyck_garnir::permmod::{
    act, generator_word, s_action_case, s_vector, subset_string, subset_table, Flavor, ModVec,
    SAction,
};

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (f, g) = (4, 5);
    let mu: Partition = "(4,2,1,1,1)".parse()?;
    let word = generator_word(&mu, f, g, Flavor::S)?;
    println!("s_μ = {word}");
    println!("s_μ m = {}", act(&word, &ModVec::generator(f, g))?);
    for i in 1..f + g {
        let c = s_action_case(&mu, i, f, g)?;
        assert_eq!(c.predicted(&mu, f, g)?, s_vector(&mu, f, g)?.apply_s(i));
        let value = match &c.result {
            SAction::ScaleMinusTwo => "-2 s_μ m".to_string(),
            SAction::Remove(l) | SAction::Jump(l) => format!("s_{l} m"),
            SAction::Zero => "0".to_string(),
        };
        println!("s{i} s_μ m = {value}  ({:?})", c.case);
    }
    for (lambda, subset) in subset_table(2, 2)? {
        println!("t_{lambda} m = {}", subset_string(subset));
    }
    Ok(())
}
