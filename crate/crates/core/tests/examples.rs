//! Every example under examples/ must run to completion with its defaults.

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(partitions_of_five, "partitions_of_five.rs");
example!(evolve_levels, "evolve_levels.rs");
example!(predecessors, "predecessors.rs");
example!(generating_functions, "generating_functions.rs");
example!(oracle_cross_check, "oracle_cross_check.rs");
example!(verify_suite, "verify_suite.rs");
example!(snapshot_resume, "snapshot_resume.rs");
example!(bench_scaling, "bench_scaling.rs");

#[test]
fn examples_run() {
    partitions_of_five::main();
    evolve_levels::main();
    predecessors::main();
    generating_functions::main();
    oracle_cross_check::main();
    verify_suite::main();
    snapshot_resume::main();
    bench_scaling::main();
}
