fn main() {
    arakelov_audit::cli_main();
}
