fn main() {
    let (doc, status) = qweyl_cli::run(std::env::args_os());
    println!("{doc}");
    std::process::exit(status);
}
