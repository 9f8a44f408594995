#pragma once

#include <string_view>

namespace due::golden {

// Generated from data/table1.golden; the two must stay byte-identical.
inline constexpr std::string_view table1_text = R"golden(# Reference table: DUE cycles for lengths 1..8, encode direction.
# One cycle per line; each element's encode successor is the next value,
# and the last value's successor is the first.

[n=1 p=0 dir=encode]
0
1

[n=2 p=0 dir=encode]
1 3 2 0

[n=2 p=1 dir=encode]
1 0
3 2

[n=3 p=0 dir=encode]
3 6 2 0
5 7 4 1

[n=3 p=1 dir=encode]
3 6 5 0
2 7 4 1

[n=3 p=2 dir=encode]
3 1 2 0
6 5 7 4

[n=4 p=0 dir=encode]
7 12 5 15 8 3 10 0
9 13 11 14 6 2 4 1

[n=4 p=1 dir=encode]
7 12 5 0
6 13 4 1
11 14 9 2
10 15 8 3

[n=4 p=2 dir=encode]
7 12 10 0
6 13 11 1
4 14 9 2
5 15 8 3

[n=4 p=3 dir=encode]
7 3 5 0
6 2 4 1
12 10 15 8
13 11 14 9

[n=5 p=0 dir=encode]
15 24 11 30 14 6 10 0
17 25 21 31 16 7 20 1
12 5 23 28 13 27 22 2
18 4 9 29 19 26 8 3

[n=5 p=1 dir=encode]
15 24 11 30 17 6 21 0
14 25 10 31 16 7 20 1
19 26 23 28 13 4 9 2
18 27 22 29 12 5 8 3

[n=5 p=2 dir=encode]
15 24 11 1 14 25 10 0
12 26 8 3 13 27 9 2
22 29 19 5 23 28 18 4
21 31 16 7 20 30 17 6

[n=5 p=3 dir=encode]
15 24 20 1 14 25 21 0
12 26 23 3 13 27 22 2
9 29 19 5 8 28 18 4
10 31 16 7 11 30 17 6

[n=5 p=4 dir=encode]
15 7 11 1 14 6 10 0
12 5 8 3 13 4 9 2
24 20 30 17 25 21 31 16
27 22 29 19 26 23 28 18

[n=6 p=0 dir=encode]
31 48 23 60 29 51 42 0
33 49 41 61 35 50 20 1
28 13 43 62 30 14 22 2
34 12 21 63 32 15 40 3
25 53 47 56 27 54 18 4
39 52 17 57 37 55 44 5
26 8 19 58 24 11 46 6
36 9 45 59 38 10 16 7

[n=6 p=1 dir=encode]
31 48 23 60 29 12 21 0
30 49 22 61 28 13 20 1
35 50 43 62 33 14 41 2
34 51 42 63 32 15 40 3
25 10 47 56 27 54 45 4
24 11 46 57 26 55 44 5
37 8 19 58 39 52 17 6
36 9 18 59 38 53 16 7

[n=6 p=2 dir=encode]
31 48 23 60 34 12 42 0
30 49 22 61 35 13 43 1
28 50 20 62 33 14 41 2
29 51 21 63 32 15 40 3
38 53 47 56 27 9 18 4
39 52 46 57 26 8 19 5
37 55 44 58 24 11 17 6
36 54 45 59 25 10 16 7

[n=6 p=3 dir=encode]
31 48 23 3 29 51 21 0
30 49 22 2 28 50 20 1
25 53 16 7 27 54 18 4
24 52 17 6 26 55 19 5
44 58 39 11 46 57 37 8
45 59 38 10 47 56 36 9
42 63 32 15 40 60 34 12
43 62 33 14 41 61 35 13

[n=6 p=4 dir=encode]
31 48 40 3 29 51 42 0
30 49 41 2 28 50 43 1
25 53 47 7 27 54 45 4
24 52 46 6 26 55 44 5
19 58 39 11 17 57 37 8
18 59 38 10 16 56 36 9
21 63 32 15 23 60 34 12
20 62 33 14 22 61 35 13

[n=6 p=5 dir=encode]
31 15 23 3 29 12 21 0
30 14 22 2 28 13 20 1
25 10 16 7 27 9 18 4
24 11 17 6 26 8 19 5
48 40 60 34 51 42 63 32
49 41 61 35 50 43 62 33
54 45 59 38 53 47 56 36
55 44 58 39 52 46 57 37

[n=7 p=0 dir=encode]
63 96 47 120 59 102 42 0
65 97 81 121 69 103 84 1
60 29 83 122 56 27 86 2
66 28 45 123 70 26 40 3
57 101 87 124 61 99 82 4
71 100 41 125 67 98 44 5
58 24 43 126 62 30 46 6
68 25 85 127 64 31 80 7
51 106 32 15 72 19 90 8
77 107 94 14 54 18 36 9
48 23 92 13 75 110 38 10
78 22 34 12 53 111 88 11
39 116 49 105 93 115 74 16
89 117 79 104 35 114 52 17
33 113 73 109 91 118 50 20
95 112 55 108 37 119 76 21

[n=7 p=1 dir=encode]
63 96 47 120 59 102 85 0
62 97 46 121 58 103 84 1
67 98 83 122 71 100 41 2
66 99 82 123 70 101 40 3
57 26 87 124 61 28 45 4
56 27 86 125 60 29 44 5
69 24 43 126 65 30 81 6
68 25 42 127 64 31 80 7
51 106 95 112 55 108 37 8
50 107 94 113 54 109 36 9
79 104 35 114 75 110 89 10
78 105 34 115 74 111 88 11
53 16 39 116 49 22 93 12
52 17 38 117 48 23 92 13
73 18 91 118 77 20 33 14
72 19 90 119 76 21 32 15

[n=7 p=2 dir=encode]
63 96 47 120 59 25 42 0
62 97 46 121 58 24 43 1
60 98 44 122 56 27 41 2
61 99 45 123 57 26 40 3
70 101 87 124 66 28 82 4
71 100 86 125 67 29 83 5
69 103 84 126 65 30 81 6
68 102 85 127 64 31 80 7
51 21 95 112 55 108 90 8
50 20 94 113 54 109 91 9
48 23 92 114 52 110 89 10
49 22 93 115 53 111 88 11
74 16 39 116 78 105 34 12
75 17 38 117 79 104 35 13
73 18 36 118 77 107 33 14
72 19 37 119 76 106 32 15

[n=7 p=3 dir=encode]
63 96 47 120 68 25 85 0
62 97 46 121 69 24 84 1
60 98 44 122 71 27 86 2
61 99 45 123 70 26 87 3
57 101 40 124 66 28 82 4
56 100 41 125 67 29 83 5
58 103 43 126 65 30 81 6
59 102 42 127 64 31 80 7
76 106 95 112 55 19 37 8
77 107 94 113 54 18 36 9
79 104 92 114 52 17 38 10
78 105 93 115 53 16 39 11
74 111 88 116 49 22 34 12
75 110 89 117 48 23 35 13
73 109 91 118 50 20 33 14
72 108 90 119 51 21 32 15

[n=7 p=4 dir=encode]
63 96 47 7 59 102 42 0
62 97 46 6 58 103 43 1
60 98 44 5 56 100 41 2
61 99 45 4 57 101 40 3
51 106 32 15 55 108 37 8
50 107 33 14 54 109 36 9
48 104 35 13 52 110 38 10
49 105 34 12 53 111 39 11
88 116 78 22 93 115 74 16
89 117 79 23 92 114 75 17
91 118 77 20 94 113 73 18
90 119 76 21 95 112 72 19
84 126 65 30 81 121 69 24
85 127 64 31 80 120 68 25
87 124 66 28 82 123 70 26
86 125 67 29 83 122 71 27

[n=7 p=5 dir=encode]
63 96 80 7 59 102 85 0
62 97 81 6 58 103 84 1
60 98 83 5 56 100 86 2
61 99 82 4 57 101 87 3
51 106 95 15 55 108 90 8
50 107 94 14 54 109 91 9
48 104 92 13 52 110 89 10
49 105 93 12 53 111 88 11
39 116 78 22 34 115 74 16
38 117 79 23 35 114 75 17
36 118 77 20 33 113 73 18
37 119 76 21 32 112 72 19
43 126 65 30 46 121 69 24
42 127 64 31 47 120 68 25
40 124 66 28 45 123 70 26
41 125 67 29 44 122 71 27

[n=7 p=6 dir=encode]
63 31 47 7 59 25 42 0
62 30 46 6 58 24 43 1
60 29 44 5 56 27 41 2
61 28 45 4 57 26 40 3
51 21 32 15 55 19 37 8
50 20 33 14 54 18 36 9
48 23 35 13 52 17 38 10
49 22 34 12 53 16 39 11
96 80 120 68 102 85 127 64
97 81 121 69 103 84 126 65
99 82 123 70 101 87 124 66
98 83 122 71 100 86 125 67
108 90 119 76 106 95 112 72
109 91 118 77 107 94 113 73
111 88 116 78 105 93 115 74
110 89 117 79 104 92 114 75

[n=8 p=0 dir=encode]
127 192 95 240 119 204 85 255 128 63 160 15 136 51 170 0
129 193 161 241 137 205 171 254 126 62 94 14 118 50 84 1
124 61 163 242 116 49 169 253 131 194 92 13 139 206 86 2
130 60 93 243 138 48 87 252 125 195 162 12 117 207 168 3
121 197 167 244 113 201 173 251 134 58 88 11 142 54 82 4
135 196 89 245 143 200 83 250 120 59 166 10 112 55 172 5
122 56 91 246 114 52 81 249 133 199 164 9 141 203 174 6
132 57 165 247 140 53 175 248 123 198 90 8 115 202 80 7
103 212 65 225 145 217 181 239 152 43 190 30 110 38 74 16
153 213 191 224 111 216 75 238 102 42 64 31 144 39 180 17
100 41 189 227 146 36 73 237 155 214 66 28 109 219 182 18
154 40 67 226 108 37 183 236 101 215 188 29 147 218 72 19
97 209 185 229 151 220 77 235 158 46 70 26 104 35 178 20
159 208 71 228 105 221 179 234 96 47 184 27 150 34 76 21
98 44 69 231 148 33 177 233 157 211 186 24 107 222 78 22
156 45 187 230 106 32 79 232 99 210 68 25 149 223 176 23

[n=8 p=1 dir=encode]
127 192 95 240 119 204 85 0
126 193 94 241 118 205 84 1
131 194 163 242 139 206 169 2
130 195 162 243 138 207 168 3
121 58 167 244 113 54 173 4
120 59 166 245 112 55 172 5
133 56 91 246 141 52 81 6
132 57 90 247 140 53 80 7
115 202 175 248 123 198 165 8
114 203 174 249 122 199 164 9
143 200 83 250 135 196 89 10
142 201 82 251 134 197 88 11
117 48 87 252 125 60 93 12
116 49 86 253 124 61 92 13
137 50 171 254 129 62 161 14
136 51 170 255 128 63 160 15
103 212 65 30 145 38 181 16
102 213 64 31 144 39 180 17
155 214 189 28 109 36 73 18
154 215 188 29 108 37 72 19
97 46 185 26 151 220 77 20
96 47 184 27 150 221 76 21
157 44 69 24 107 222 177 22
156 45 68 25 106 223 176 23
79 232 99 210 187 230 149 32
78 233 98 211 186 231 148 33
179 234 159 208 71 228 105 34
178 235 158 209 70 229 104 35
67 226 147 218 183 236 101 40
66 227 146 219 182 237 100 41
191 224 111 216 75 238 153 42
190 225 110 217 74 239 152 43

[n=8 p=2 dir=encode]
127 192 95 240 119 204 170 0
126 193 94 241 118 205 171 1
124 194 92 242 116 206 169 2
125 195 93 243 117 207 168 3
134 197 167 244 142 201 82 4
135 196 166 245 143 200 83 5
133 199 164 246 141 203 81 6
132 198 165 247 140 202 80 7
115 53 175 248 123 57 90 8
114 52 174 249 122 56 91 9
112 55 172 250 120 59 89 10
113 54 173 251 121 58 88 11
138 48 87 252 130 60 162 12
139 49 86 253 131 61 163 13
137 50 84 254 129 62 161 14
136 51 85 255 128 63 160 15
103 212 190 225 110 217 74 16
102 213 191 224 111 216 75 17
100 214 189 227 109 219 73 18
101 215 188 226 108 218 72 19
158 209 70 229 151 220 178 20
159 208 71 228 150 221 179 21
157 211 69 231 148 222 177 22
156 210 68 230 149 223 176 23
107 33 78 233 98 44 186 24
106 32 79 232 99 45 187 25
104 35 77 235 97 46 185 26
105 34 76 234 96 47 184 27
146 36 182 237 155 41 66 28
147 37 183 236 154 40 67 29
145 38 181 239 152 43 65 30
144 39 180 238 153 42 64 31

[n=8 p=3 dir=encode]
127 192 95 240 119 51 85 0
126 193 94 241 118 50 84 1
124 194 92 242 116 49 86 2
125 195 93 243 117 48 87 3
121 197 88 244 113 54 82 4
120 196 89 245 112 55 83 5
122 199 91 246 114 52 81 6
123 198 90 247 115 53 80 7
140 202 175 248 132 57 165 8
141 203 174 249 133 56 164 9
143 200 172 250 135 59 166 10
142 201 173 251 134 58 167 11
138 207 168 252 130 60 162 12
139 206 169 253 131 61 163 13
137 205 171 254 129 62 161 14
136 204 170 255 128 63 160 15
103 43 190 225 110 217 181 16
102 42 191 224 111 216 180 17
100 41 189 227 109 219 182 18
101 40 188 226 108 218 183 19
97 46 185 229 104 220 178 20
96 47 184 228 105 221 179 21
98 44 186 231 107 222 177 22
99 45 187 230 106 223 176 23
148 33 78 233 157 211 69 24
149 32 79 232 156 210 68 25
151 35 77 235 158 209 70 26
150 34 76 234 159 208 71 27
146 36 73 237 155 214 66 28
147 37 72 236 154 215 67 29
145 38 74 239 152 212 65 30
144 39 75 238 153 213 64 31

[n=8 p=4 dir=encode]
127 192 95 240 136 51 170 0
126 193 94 241 137 50 171 1
124 194 92 242 139 49 169 2
125 195 93 243 138 48 168 3
121 197 88 244 142 54 173 4
120 196 89 245 143 55 172 5
122 199 91 246 141 52 174 6
123 198 90 247 140 53 175 7
115 202 80 248 132 57 165 8
114 203 81 249 133 56 164 9
112 200 83 250 135 59 166 10
113 201 82 251 134 58 167 11
117 207 87 252 130 60 162 12
116 206 86 253 131 61 163 13
118 205 84 254 129 62 161 14
119 204 85 255 128 63 160 15
152 212 190 225 110 38 74 16
153 213 191 224 111 39 75 17
155 214 189 227 109 36 73 18
154 215 188 226 108 37 72 19
158 209 185 229 104 35 77 20
159 208 184 228 105 34 76 21
157 211 186 231 107 33 78 22
156 210 187 230 106 32 79 23
148 222 177 233 98 44 69 24
149 223 176 232 99 45 68 25
151 220 178 235 97 46 70 26
150 221 179 234 96 47 71 27
146 219 182 237 100 41 66 28
147 218 183 236 101 40 67 29
145 217 181 239 103 43 65 30
144 216 180 238 102 42 64 31

[n=8 p=5 dir=encode]
127 192 95 15 119 204 85 0
126 193 94 14 118 205 84 1
124 194 92 13 116 206 86 2
125 195 93 12 117 207 87 3
121 197 88 11 113 201 82 4
120 196 89 10 112 200 83 5
122 199 91 9 114 203 81 6
123 198 90 8 115 202 80 7
103 212 65 30 110 217 74 16
102 213 64 31 111 216 75 17
100 214 66 28 109 219 73 18
101 215 67 29 108 218 72 19
97 209 70 26 104 220 77 20
96 208 71 27 105 221 76 21
98 211 69 24 107 222 78 22
99 210 68 25 106 223 79 23
176 232 156 45 187 230 149 32
177 233 157 44 186 231 148 33
179 234 159 47 184 228 150 34
178 235 158 46 185 229 151 35
182 237 155 41 189 227 146 36
183 236 154 40 188 226 147 37
181 239 152 43 190 225 145 38
180 238 153 42 191 224 144 39
168 252 130 60 162 243 138 48
169 253 131 61 163 242 139 49
171 254 129 62 161 241 137 50
170 255 128 63 160 240 136 51
174 249 133 56 164 246 141 52
175 248 132 57 165 247 140 53
173 251 134 58 167 244 142 54
172 250 135 59 166 245 143 55

[n=8 p=6 dir=encode]
127 192 160 15 119 204 170 0
126 193 161 14 118 205 171 1
124 194 163 13 116 206 169 2
125 195 162 12 117 207 168 3
121 197 167 11 113 201 173 4
120 196 166 10 112 200 172 5
122 199 164 9 114 203 174 6
123 198 165 8 115 202 175 7
103 212 190 30 110 217 181 16
102 213 191 31 111 216 180 17
100 214 189 28 109 219 182 18
101 215 188 29 108 218 183 19
97 209 185 26 104 220 178 20
96 208 184 27 105 221 179 21
98 211 186 24 107 222 177 22
99 210 187 25 106 223 176 23
79 232 156 45 68 230 149 32
78 233 157 44 69 231 148 33
76 234 159 47 71 228 150 34
77 235 158 46 70 229 151 35
73 237 155 41 66 227 146 36
72 236 154 40 67 226 147 37
74 239 152 43 65 225 145 38
75 238 153 42 64 224 144 39
87 252 130 60 93 243 138 48
86 253 131 61 92 242 139 49
84 254 129 62 94 241 137 50
85 255 128 63 95 240 136 51
81 249 133 56 91 246 141 52
80 248 132 57 90 247 140 53
82 251 134 58 88 244 142 54
83 250 135 59 89 245 143 55

[n=8 p=7 dir=encode]
127 63 95 15 119 51 85 0
126 62 94 14 118 50 84 1
124 61 92 13 116 49 86 2
125 60 93 12 117 48 87 3
121 58 88 11 113 54 82 4
120 59 89 10 112 55 83 5
122 56 91 9 114 52 81 6
123 57 90 8 115 53 80 7
103 43 65 30 110 38 74 16
102 42 64 31 111 39 75 17
100 41 66 28 109 36 73 18
101 40 67 29 108 37 72 19
97 46 70 26 104 35 77 20
96 47 71 27 105 34 76 21
98 44 69 24 107 33 78 22
99 45 68 25 106 32 79 23
192 160 240 136 204 170 255 128
193 161 241 137 205 171 254 129
195 162 243 138 207 168 252 130
194 163 242 139 206 169 253 131
198 165 247 140 202 175 248 132
199 164 246 141 203 174 249 133
197 167 244 142 201 173 251 134
196 166 245 143 200 172 250 135
216 180 238 153 213 191 224 144
217 181 239 152 212 190 225 145
219 182 237 155 214 189 227 146
218 183 236 154 215 188 226 147
222 177 233 157 211 186 231 148
223 176 232 156 210 187 230 149
221 179 234 159 208 184 228 150
220 178 235 158 209 185 229 151
)golden";

}  // namespace due::golden
