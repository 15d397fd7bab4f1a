#include <cstdio>

int main() {
    std::puts("subchord cli placeholder");
    return 0;
}
