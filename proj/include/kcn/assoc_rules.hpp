#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kcn/corpus.hpp"
#include "kcn/window.hpp"

namespace kcn {

struct Transaction {
    std::int64_t article_id = 0;
    std::vector<std::string> items;  // sorted, unique, non-empty
};

// One transaction per article with at least one canonical keyword.
std::vector<Transaction> make_transactions(const std::vector<ArticleRecord>& corpus);
std::vector<Transaction> make_transactions(const std::vector<ArticleRecord>& corpus,
                                           const TimeWindow& window);

using Itemset = std::vector<std::string>;  // sorted, unique

// Level-wise Apriori. Returns every itemset of size in [1, max_size] whose
// support count reaches min_support_count; map order is deterministic.
std::map<Itemset, std::size_t> mine_frequent_itemsets(const std::vector<Transaction>& transactions,
                                                      std::size_t min_support_count,
                                                      std::size_t max_size = 4);

struct AssociationRule {
    Itemset antecedent;
    Itemset consequent;
    std::size_t support_count = 0;  // of antecedent ∪ consequent
    double confidence = 0.0;
    double lift = 0.0;
    bool low_lift = false;  // lift < 1; kept in the output but flagged

    bool operator==(const AssociationRule&) const = default;
};

// Splits every frequent itemset of size ≥ 2 into antecedent/consequent and
// keeps rules meeting min_confidence. Sorted by lift descending, then
// confidence descending, then rule text. Throws std::logic_error if the
// itemset map is not closed under subsets.
std::vector<AssociationRule> derive_rules(const std::map<Itemset, std::size_t>& itemsets,
                                          double min_confidence,
                                          std::size_t transaction_count);

std::string itemset_text(const Itemset& items);  // ";"-joined

}  // namespace kcn
