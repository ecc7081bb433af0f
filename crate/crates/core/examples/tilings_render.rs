// Enumerate the Dyck tilings of a skew shape and draw the interesting ones.
use dyck_garnir::dyck::{
    enumerate_tilings, is_cover_expansive, is_cover_inclusive, render, CiCondition, Side,
};
use dyck_garnir::partition::SkewShape;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = SkewShape::new("(6,6,4,3,1,1)".parse()?, "(4,1,1)".parse()?)?;
    let tilings = enumerate_tilings(&shape)?;
    println!("{shape}: {} Dyck tilings", tilings.len());
    for t in &tilings {
        let ci = is_cover_inclusive(t, CiCondition::CoverInclusive);
        let ce = is_cover_expansive(t, Side::Both);
        if ci || ce {
            println!(
                "{} tiles, {} big, cover-inclusive {ci}, cover-expansive {ce}",
                t.len(),
                t.big_tile_count()
            );
            println!("{}", render(t));
        }
    }
    let json = serde_json::to_string(&tilings[0].to_json())?;
    println!("first tiling as JSON: {json}");
    Ok(())
}
