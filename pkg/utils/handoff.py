from collections import deque


class BlockQueue:
    """
    Reorder buffer between sieve workers and the accumulator.

    Workers finish segments in any order; blocks leave the queue strictly in
    segment order.
    """
    def __init__(self, first_seq=0):
        self.pending = {}
        self.ready = deque()
        self.next_seq = first_seq

    def put(self, seq, item):
        """
        Store a finished segment and release every segment now in order.

        Args:
            seq: Sequence number of the segment
            item: The segment's payload
        """
        if seq < self.next_seq or seq in self.pending:
            raise ValueError(f"segment {seq} delivered twice")
        self.pending[seq] = item
        while self.next_seq in self.pending:
            self.ready.append(self.pending.pop(self.next_seq))
            self.next_seq += 1

    def drain(self):
        while self.ready:
            yield self.ready.popleft()
