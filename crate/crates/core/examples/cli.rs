//! Driving the command-line front end in process.

use gentle_cones::cli::run;

fn main() {
    let commands: [&[&str]; 4] = [
        &[
            "gentle-cones",
            "algebra",
            "validate",
            "--algebra",
            "@kronecker",
        ],
        &[
            "gentle-cones",
            "word",
            "check",
            "--algebra",
            "@kronecker",
            "--band",
            "(d ~c)^2 ~a b @ 1",
        ],
        &[
            "gentle-cones",
            "hom",
            "list",
            "--algebra",
            "@kronecker",
            "--source",
            "band: (d ~c)^2 ~a b @ 1",
            "--target",
            "band: d ~c ~a b (d ~c)^2 ~a b @ 1",
        ],
        &[
            "gentle-cones",
            "cone",
            "verify",
            "--algebra",
            "@kronecker",
            "--source",
            "band: (d ~c)^2 ~a b @ 1",
            "--target",
            "band: d ~c ~a b (d ~c)^2 ~a b @ 1",
        ],
    ];
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    for args in commands {
        println!("$ {}", args[1..].join(" "));
        assert_eq!(run(args.iter().copied(), &mut stdout, &mut stderr), 0);
    }
}
