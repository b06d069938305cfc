#include <gtest/gtest.h>

#include "golden_runner.hpp"

namespace peakred {
namespace {

TEST(Golden, Corpus) {
    auto cases = golden::load_all(PEAKRED_GOLDEN_DIR);
    ASSERT_GE(cases.size(), 25u);
    for (const auto& c : cases) {
        SCOPED_TRACE(c.file.filename().string());
        auto first = golden::run(PEAKRED_CLI, c);
        if (golden::regen_requested()) {
            golden::regenerate(c, first);
            continue;
        }
        EXPECT_EQ(first.exit_code, c.exit_code);
        EXPECT_EQ(first.out, c.expected);
        auto second = golden::run(PEAKRED_CLI, c);
        EXPECT_EQ(second.out, first.out) << "output not byte-stable";
    }
}

}  // namespace
}  // namespace peakred
