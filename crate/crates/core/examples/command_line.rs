// Driving the command line in-process.
use dyck_garnir::cli::run;

pub fn main() {
    for args in [
        &["fp", "--lambda", "(5,3,3,1)", "--hook"][..],
        &["matrix", "--f", "1", "--g", "1", "--which", "product"],
        &[
            "garnir", "--pi", "(8,4)", "--node", "1,4", "--e", "2", "--json",
        ],
        &[
            "tilings", "count", "--outer", "(3,3,3)", "--inner", "()", "--filter", "ci",
        ],
        &["verify", "all", "--max-box", "2"],
    ] {
        let out = run(std::iter::once("dyck-garnir").chain(args.iter().copied()));
        println!("$ dyck-garnir {}  [exit {}]", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
