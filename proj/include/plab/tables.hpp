#pragma once

#include <string_view>
#include <vector>

namespace plab::tables {

// One listed prime very-mutation-friendly class: interior size, a member permutation,
// exchange-graph order and graph name. A class may be listed more than once.
struct ClassRow {
    int interior;
    std::string_view permutation;
    int order;
    std::string_view name;
};

inline const std::vector<ClassRow>& prime_classes()
{
    static const std::vector<ClassRow> rows{
        {0, "312", 1, "A"},
        {1, "3412", 2, "B"},
        {2, "365124", 3, "C"},
        {2, "34512", 5, "D"},
        {3, "38761254", 4, "E"},
        {3, "38517246", 5, "F"},
        {3, "38571426", 5, "F"},
        {3, "38617425", 5, "F"},
        {3, "3576214", 5, "F"},
        {3, "3756124", 7, "G"},
        {3, "356124", 10, "H"},
        {3, "345612", 14, "I"},
        {4, "3(10)98712654", 5, "J"},
        {4, "37682154", 6, "K"},
        {4, "3(10)96182574", 7, "L"},
        {4, "3(10)96815274", 7, "L"},
        {4, "3(10)97185264", 7, "L"},
        {4, "397618254", 7, "L"},
        {4, "36587214", 7, "M"},
        {4, "3(10)57941628", 8, "N"},
        {4, "3(10)51829647", 8, "N"},
        {4, "3(10)51729468", 8, "N"},
        {4, "3(10)51792648", 8, "N"},
        {4, "3(10)81794625", 8, "N"},
        {4, "3(10)69741528", 8, "N"},
        {4, "395871426", 8, "N"},
        {4, "397618425", 8, "N"},
        {4, "379628415", 8, "N"},
        {4, "36872154", 8, "N"},
        {4, "3(10)98714625", 9, "O"},
        {4, "3(10)98741526", 9, "O"},
        {4, "3(10)96184527", 9, "O"},
        {4, "3(10)96815427", 9, "O"},
        {4, "3(10)97185426", 9, "O"},
        {4, "3(10)97841625", 9, "O"},
        {4, "3(10)61982574", 9, "O"},
        {4, "3(10)61895274", 9, "O"},
        {4, "3(10)81729564", 9, "O"},
        {4, "375129(10)648", 9, "O"},
        {4, "39(10)6284517", 9, "O"},
        {4, "4(10)62895173", 9, "O"},
        {4, "398671254", 9, "O"},
        {4, "395871264", 9, "O"},
        {4, "3(10)71985264", 9, "O"},
        {4, "3(10)58149627", 9, "P"},
        {4, "395718426", 9, "P"},
        {4, "35872146", 9, "P"},
        {4, "395784126", 10, "Q"},
        {4, "396874125", 10, "Q"},
        {4, "397681524", 10, "Q"},
        {4, "48672153", 10, "Q"},
        {4, "37862145", 10, "Q"},
        {4, "395618247", 11, "R"},
        {4, "34768215", 11, "R"},
        {4, "395681427", 12, "S"},
        {4, "396178425", 12, "S"},
        {4, "395178246", 12, "S"},
        {4, "34761825", 12, "S"},
        {4, "35871426", 12, "S"},
        {4, "36872415", 12, "S"},
        {4, "38761245", 13, "T"},
        {4, "38671254", 13, "T"},
        {4, "38571246", 14, "U"},
        {4, "34(10)1895276", 15, "V"},
        {4, "3(10)91782564", 15, "V"},
        {4, "3(10)91784526", 15, "V"},
        {4, "3(10)96714528", 15, "V"},
        {4, "3(10)96781524", 15, "V"},
        {4, "3(10)96784125", 15, "V"},
        {4, "3(10)97815624", 15, "V"},
        {4, "3(10)97845126", 15, "V"},
        {4, "3(10)51789264", 15, "V"},
        {4, "3(10)51289467", 15, "V"},
        {4, "3(10)51892674", 15, "V"},
        {4, "3(10)56794128", 15, "V"},
        {4, "3(10)61789524", 15, "V"},
        {4, "3(10)67945128", 15, "V"},
        {4, "3(10)71895624", 15, "V"},
        {4, "3(10)71289564", 15, "V"},
        {4, "365129(10)478", 15, "V"},
        {4, "34(10)8719562", 15, "V"},
        {4, "398671425", 15, "V"},
        {4, "348172956", 15, "V"},
        {4, "346189527", 15, "V"},
        {4, "396178254", 15, "V"},
        {4, "38617245", 15, "W"},
        {4, "38671425", 15, "W"},
        {4, "34867125", 16, "X"},
        {4, "34871256", 16, "X"},
        {4, "3567214", 17, "Y"},
        {4, "38567124", 19, "Z1"},
        {4, "3576124", 20, "Z2"},
        {4, "34(10)1789265", 25, "Z3"},
        {4, "34(10)1789526", 25, "Z3"},
        {4, "34(10)1289567", 25, "Z3"},
        {4, "34(10)1892675", 25, "Z3"},
        {4, "34(10)1895627", 25, "Z3"},
        {4, "34(10)8195672", 25, "Z3"},
        {4, "34(10)9815672", 25, "Z3"},
        {4, "34(10)6789512", 25, "Z3"},
        {4, "34(10)7895612", 25, "Z3"},
        {4, "4(10)17895623", 25, "Z3"},
        {4, "349178256", 25, "Z3"},
        {4, "349781562", 25, "Z3"},
        {4, "349678152", 25, "Z3"},
        {4, "34718256", 25, "Z3"},
        {4, "34617825", 25, "Z3"},
        {4, "3467125", 26, "Z4"},
        {4, "456123", 34, "Z5"},
        {4, "3456712", 42, "Z6"},
    };
    return rows;
}

// Graphs given by adjacency lists, "v:w1,w2;..." with 1-based vertices.
struct AdjacencyListing {
    std::string_view name;
    std::string_view lists;
};

inline const std::vector<AdjacencyListing>& listed_graphs()
{
    static const std::vector<AdjacencyListing> graphs{
        {"I", "1:2,3,4;2:5,6,1;3:7,8,1;4:6,9,1;5:10,7,2;6:11,4,2;7:12,3,5;8:13,9,3;9:14,4,8;10:12,11,5;11:14,6,10;12:13,7,10;13:8,14,12;14:9,11,13"},
        {"P", "1:2;2:3,4,1,5;3:6,2,7;4:6,8,2;5:7,8,2;6:4,9,3;7:9,5,3;8:9,5,4;9:8,7,6"},
        {"R", "1:2,3,4;2:5,1,6;3:5,7,8,1;4:6,8,1;5:3,9,2;6:9,4,2;7:10,3;8:9,11,4,3;9:8,6,5;10:11,7;11:8,10"},
        {"S", "1:2,3,4;2:5,6,1;3:5,7,1;4:6,8,1;5:9,3,2;6:10,4,2;7:9,8,3;8:10,4,7;9:11,7,10,5;10:12,8,6,9;11:9,12;12:10,11"},
        {"T", "1:2,3;2:4,1,5;3:4,6,1;4:7,3,8,2;5:8,2;6:9,10,3;7:9,11,4;8:11,5,4;9:12,6,7;10:12,6;11:13,8,7;12:10,13,9;13:11,12"},
        {"U", "1:2,3,4;2:5,1,6;3:5,7,8,1;4:6,8,1;5:3,9,2;6:9,4,2;7:10,3;8:9,11,4,3;9:12,8,6,5;10:13,11,7;11:14,8,10;12:14,9;13:10,14;14:11,12,13"},
        {"V", "1:2,3,4;2:5,6,7,1;3:5,8,1;4:6,9,1;5:10,11,3,2;6:12,13,4,2;7:11,13,2;8:10,9,3;9:12,4,8;10:14,8,12,5;11:14,5,7;12:15,9,6,10;13:15,6,7;14:10,15,11;15:12,13,14"},
        {"W", "1:2,3,4;2:5,6,1;3:7,8,1;4:6,8,9,1;5:10,7,2;6:10,11,4,2;7:12,3,5;8:12,13,4,3;9:14,13,4;10:15,12,6,5;11:15,14,6;12:8,10,7;13:9,8;14:9,11;15:11,10"},
        {"X", "1:2,3,4;2:5,6,1;3:7,8,1;4:6,8,1;5:9,10,7,2;6:10,4,2;7:11,12,3,5;8:12,4,3;9:13,11,5;10:14,12,6,5;11:15,7,9;12:16,8,10,7;13:15,14,9;14:16,10,13;15:16,11,13;16:12,14,15"},
        {"Y", "1:2,3;2:4,5,1,6;3:7,8,1;4:9,7,2,10;5:9,11,2;6:10,11,2;7:3,12,4;8:12,3;9:5,13,4;10:13,14,6,4;11:13,6,5;12:15,8,14,7;13:16,11,10,9;14:17,10,12;15:17,12;16:17,13;17:14,16,15"},
        {"Z1", "1:2,3,4;2:5,6,7,1;3:6,8,1;4:7,9,1;5:10,11,2;6:12,13,3,2;7:11,14,4,2;8:13,9,3;9:14,4,8;10:15,12,5;11:16,7,5;12:17,6,10;13:18,8,14,6;14:19,9,7,13;15:17,16,10;16:19,11,15;17:18,12,15;18:13,19,17;19:14,16,18"},
        {"Z2", "1:2,3;2:4,5,1,6;3:4,7,1;4:8,3,9,2;5:10,11,2;6:9,11,2;7:12,13,3;8:12,14,10,4;9:14,6,4;10:15,16,5,8;11:16,6,5;12:17,15,7,8;13:17,7;14:18,16,9,8;15:19,10,12;16:20,11,14,10;17:19,13,18,12;18:20,14,17;19:20,15,17;20:16,18,19"},
        {"Z3", "1:2,3,4,5;2:6,7,8,1;3:9,10,11,1;4:7,10,12,1;5:8,11,13,1;6:14,15,9,2;7:14,16,4,2;8:15,17,5,2;9:18,19,3,6;10:18,20,4,3;11:19,21,5,3;12:16,20,13,4;13:17,21,5,12;14:22,18,7,6;15:23,19,8,6;16:22,12,17,7;17:23,13,8,16;18:24,10,14,9;19:25,11,15,9;20:24,12,21,10;21:25,13,11,20;22:24,16,23,14;23:25,17,15,22;24:20,22,25,18;25:21,23,19,24"},
        {"Z4", "1:2,3,4;2:5,6,7,1;3:5,8,1;4:6,9,1;5:10,11,3,2;6:12,13,4,2;7:11,14,2;8:10,15,9,3;9:12,16,4,8;10:17,8,12,5;11:18,7,5;12:19,9,6,10;13:20,14,6;14:21,7,13;15:22,16,8;16:23,9,15;17:22,19,18,10;18:24,21,11,17;19:23,20,12,17;20:25,13,21,19;21:26,14,18,20;22:23,24,15,17;23:25,16,19,22;24:26,18,22;25:20,26,23;26:21,24,25"},
        {"Z5", "1:2,3,4;2:5,6,1,7;3:8,9,10,1;4:11,9,12,1;5:13,8,2,14;6:13,11,15,2;7:14,15,2;8:3,16,5;9:17,4,3;10:16,18,3;11:19,4,6;12:19,20,4;13:6,21,5;14:21,22,7,5;15:21,23,7,6;16:24,10,22,8;17:25,20,18,9;18:26,27,10,17;19:28,12,23,11;20:29,27,12,17;21:30,15,14,13;22:31,14,16;23:32,15,19;24:26,31,16;25:29,17,26;26:33,18,24,25;27:33,18,20;28:29,19,32;29:20,33,28,25;30:32,31,21;31:34,22,30,24;32:34,23,30,28;33:27,34,26,29;34:31,32,33"},
        {"Z6", "1:2,3,4,5;2:6,7,8,1;3:9,10,11,1;4:7,12,13,1;5:8,11,14,1;6:15,16,9,2;7:17,18,4,2;8:16,19,5,2;9:20,21,3,6;10:22,23,12,3;11:21,24,5,3;12:25,26,4,10;13:18,27,14,4;14:19,28,5,13;15:29,20,17,6;16:30,21,8,6;17:31,25,7,15;18:32,13,19,7;19:33,14,8,18;20:34,22,9,15;21:35,11,16,9;22:36,10,25,20;23:37,26,24,10;24:38,28,11,23;25:39,12,17,22;26:40,27,12,23;27:41,13,28,26;28:42,14,24,27;29:34,31,30,15;30:35,33,16,29;31:39,32,17,29;32:41,18,33,31;33:42,19,30,32;34:36,35,20,29;35:38,21,30,34;36:37,22,39,34;37:23,40,38,36;38:24,42,35,37;39:40,25,31,36;40:26,41,39,37;41:27,32,42,40;42:28,33,38,41"},
    };
    return graphs;
}

// Graphs shown only as drawings, pinned by the first listed permutation carrying the name whose
// necklace is prime. For O the first listed row decomposes and its graph is C□C.
struct DrawnGraph {
    std::string_view name;
    std::string_view permutation;
};

inline const std::vector<DrawnGraph>& drawn_graphs()
{
    static const std::vector<DrawnGraph> graphs{
        {"A", "312"},
        {"B", "3412"},
        {"C", "365124"},
        {"D", "34512"},
        {"E", "38761254"},
        {"F", "38517246"},
        {"G", "3756124"},
        {"H", "356124"},
        {"J", "3(10)98712654"},
        {"K", "37682154"},
        {"L", "3(10)96182574"},
        {"M", "36587214"},
        {"N", "3(10)57941628"},
        {"O", "398671254"},
        {"Q", "395784126"},
    };
    return graphs;
}

// Distinct exchange-graph orders over all positroids with interior size i, i = 0..4.
inline const std::vector<std::vector<int>>& exchange_graph_orders()
{
    static const std::vector<std::vector<int>> orders{
        {1},
        {1, 2},
        {1, 2, 3, 4, 5},
        {1, 2, 3, 4, 5, 6, 7, 8, 10, 14},
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 19, 20, 25, 26, 28, 34, 42},
    };
    return orders;
}

// Graph names listed per interior size.
inline const std::vector<std::vector<std::string_view>>& exchange_graph_names()
{
    static const std::vector<std::vector<std::string_view>> names{
        {"A"},
        {"A", "B"},
        {"A", "B", "C", "D", "B□B"},
        {"A", "B", "C", "D", "E", "F", "G", "H", "I", "B□C", "B□B□B", "B□D"},
        {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N", "O", "P", "Q", "R", "S", "T",
         "U", "V", "W", "X", "Y", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "B□C", "B□B□B", "B□D", "B□E", "B□G",
         "B□F", "B□H", "B□I", "B□B□B□B", "B□B□C", "B□B□D", "C□C", "D□D"},
    };
    return names;
}

} // namespace plab::tables
