use std::process::ExitCode;

fn main() -> ExitCode {
    cyclic_dna::cli::main_with_args(std::env::args_os())
}
