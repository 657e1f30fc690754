#ifndef RANDIC_ENUMERATION_HPP
#define RANDIC_ENUMERATION_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "randic/graph.hpp"

namespace randic {

/// Pull-based graph source. One consumer; graphs pulled from it may be
/// fanned out to parallel workers.
class GraphStream {
public:
    virtual ~GraphStream() = default;
    virtual std::optional<Graph> next() = 0;
};

// Exactly one representative per isomorphism class of connected graphs
// on n vertices, streamed in sorted canonical-form order. 1 <= n <= 7.
std::unique_ptr<GraphStream> enumerate_connected(int n);

// Streams a graph6 corpus in file order, skipping blank lines. Decode
// failures abort the stream with the offending line number.
std::unique_ptr<GraphStream> ingest(const std::filesystem::path& path);

/// Where a verification run draws its graphs from.
struct CorpusSource {
    enum class Kind { builtin, file };
    Kind kind = Kind::builtin;
    int n = 0;                    // builtin order
    std::filesystem::path path;   // corpus file

    static CorpusSource builtin(int n) { return {Kind::builtin, n, {}}; }
    static CorpusSource file(std::filesystem::path p) {
        return {Kind::file, 0, std::move(p)};
    }
    std::unique_ptr<GraphStream> open() const;
    std::string describe() const;
};

}  // namespace randic

#endif  // RANDIC_ENUMERATION_HPP
