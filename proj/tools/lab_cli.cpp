// placeholder; subcommands are filled in as modules land
#include <cstdio>

int main() {
    std::puts("lab_cli: not yet wired");
    return 2;
}
