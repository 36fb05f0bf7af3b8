//! Runs every program in `examples/`; each one asserts its own claims.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 10] = [
    "algebra",
    "walks",
    "complexes",
    "morphisms",
    "graph_cone",
    "power_split",
    "single_map",
    "quasi_cone",
    "oracle",
    "cli",
];

/// `cargo test` builds examples next to the test binaries' `deps/` directory.
fn example_binary(name: &str) -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let path = exe
        .parent()?
        .parent()?
        .join("examples")
        .join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
    path.exists().then_some(path)
}

#[test]
fn examples_run() {
    let listed: Vec<String> = std::fs::read_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/examples"))
        .unwrap()
        .map(|e| {
            e.unwrap()
                .path()
                .file_stem()
                .unwrap()
                .to_string_lossy()
                .into_owned()
        })
        .collect();
    for name in &listed {
        assert!(
            EXAMPLES.contains(&name.as_str()),
            "example `{name}` is not run by this test"
        );
    }
    for name in EXAMPLES {
        let output = match example_binary(name) {
            Some(bin) => Command::new(bin).output().unwrap(),
            None => Command::new(env!("CARGO"))
                .args(["run", "--quiet", "--example", name])
                .current_dir(env!("CARGO_MANIFEST_DIR"))
                .output()
                .unwrap(),
        };
        assert!(
            output.status.success(),
            "example `{name}` failed:\n{}",
            String::from_utf8_lossy(&output.stderr)
        );
        assert!(
            !output.stdout.is_empty(),
            "example `{name}` printed nothing"
        );
    }
}
