fn main() { std::process::exit(critgrp::cli::run()); }
