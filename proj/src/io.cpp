#include "roomtheory/io.hpp"

#include <system_error>

#include "roomtheory/error.hpp"

namespace roomtheory {

namespace fs = std::filesystem;

void write_file_atomically(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot open for writing: " + tmp.string());
        try {
            writer(out);
            out.flush();
            if (!out) throw Error("write failed: " + tmp.string());
        } catch (...) {
            out.close();
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw;
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw InputError("cannot move output into place: " + path.string() + ": " + ec.message());
    }
}

std::ifstream open_input(const fs::path& path, bool binary) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) throw InputError("no such file: " + path.string());
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw InputError("cannot open: " + path.string());
    return in;
}

}  // namespace roomtheory
